#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanweyl/cartanweyl.hpp"
#include "lweights/rational.hpp"

namespace qloop::lweights {

using linop::BasisIndex;
using linop::ModulePtr;
using linop::OpSeries;
using linop::SparseVec;
using presentations::GeneratorImages;

/// A vector of a module together with the series order up to which it has
/// been certified as a joint eigenvector (-1: not yet checked).
struct LWeightVector {
  ModulePtr module;
  SparseVec vec;
  int certified_order = -1;

  std::string render() const;
};

/// Psi_i^+(u) for each node i = 1..l (index i-1), and Psi_i^-(u^{-1}) when
/// the representation has f images (empty otherwise).
struct LWeight {
  std::vector<RationalForm> plus;
  std::vector<RationalForm> minus;

  bool same_function(const LWeight& o) const;
  /// Psi_{i,0}^+ Psi_{i,0}^- = 1 for every node (true if minus is empty).
  bool constant_terms_inverse() const;
  /// Plus and minus components are expansions of one rational function.
  bool signs_consistent() const;
};

/// Thrown by eigenvalue_series when a coefficient does not act as a scalar.
class NotEigenvectorError : public DomainError {
 public:
  NotEigenvectorError(int order, std::string residual);
  int order() const { return order_; }
  const std::string& residual() const { return residual_; }

 private:
  int order_;
  std::string residual_;
};

/// Coefficients C_{k,m} of w_m = sum_k C_{k,m} v_{m + k(1,-1,1)}; k = 0..m2.
std::vector<Field> w_coefficients(const coeff::LambdaSpec& lambda, const BasisIndex& m);

/// w_m for gl3 evaluation modules; v_m for gl2 evaluation, oscillator and
/// tensor modules. DomainError when a C_{k,m} denominator vanishes
/// (integer lambda), EscapeError when a term leaves a truncated module.
LWeightVector build_w_basis(const ModulePtr& module, const BasisIndex& m);

/// Scalar series Psi(u) with phi[n] v = Psi_n v for every n <= phi.order().
/// Throws NotEigenvectorError (first failing order and the residual) or
/// EscapeError when some image leaves the truncation window.
FieldSeries eigenvalue_series(const OpSeries& phi, const SparseVec& v);

/// Bounds for the reconstruction of each Psi_i^{+-}.
struct ReconstructionBounds {
  int max_num = 4;
  int max_den = 4;
};

/// Runs eigenvalue_series on every phi_i^{+-} of the table (order N) and
/// reconstructs the rational functions. Minus components are computed only
/// when the images have f. Throws DomainError if some series has no
/// rational form within the bounds.
LWeight compute_lweight(cartanweyl::RootVectorTable& table, LWeightVector& v, int N,
                        ReconstructionBounds bounds = {});

/// Same through the Gauss path (evaluation modules only).
LWeight compute_lweight_gauss(LWeightVector& v, int N, ReconstructionBounds bounds = {});

/// Smallest N with N >= max_num + max_den + 1.
inline int required_order(ReconstructionBounds b) { return b.max_num + b.max_den + 1; }

/// Positions sharing the grading of `pos`.
std::vector<std::size_t> weight_space(const ModulePtr& module, std::size_t pos);

/// One joint eigenspace of the phi coefficients on a weight space.
struct EigenBlock {
  /// Joint eigenvalues, in the order of DecompositionReport::probes.
  std::vector<Field> eigenvalues;
  /// Algebraic multiplicity (number of equal diagonal tuples).
  std::size_t multiplicity = 0;
  std::vector<LWeightVector> basis;
};

struct DecompositionReport {
  std::vector<std::size_t> positions;
  /// Labels of the phi coefficients used, e.g. "phi+_1,2".
  std::vector<std::string> probes;
  std::vector<EigenBlock> blocks;
  /// The probes are lower triangular in the order of `positions`, so the
  /// diagonal tuples are the joint eigenvalues.
  bool triangular = true;
  /// Sum of the eigenspace dimensions equals the weight-space dimension.
  bool diagonalizable = false;
  /// Human-readable findings (Jordan blocks, non-triangular probes).
  std::vector<std::string> findings;
};

/// Joint eigen-decomposition of the phi_{i,n}^{+-} (1 <= n <= N, and phi^-
/// when available) on the weight space of basis position `pos`.
/// InternalError if two probes fail to commute on the weight space.
DecompositionReport lweight_decompose(cartanweyl::RootVectorTable& table, std::size_t pos, int N);

/// Componentwise product.
LWeight tensor_highest_lweight(const std::vector<LWeight>& factors);

/// Factorization of one node into prefundamental pieces: the constant is
/// the one-dimensional part, each (1 - a u)^{+-1} factor one L^{+-}_{i,a}.
struct PrefundamentalNode {
  int node = 0;
  bool factored = false;
  FactoredRational form;
};

struct PrefundamentalReport {
  std::vector<PrefundamentalNode> nodes;
  bool complete() const;
  std::string render() const;
};

/// DomainError on a zero constant term.
PrefundamentalReport match_prefundamental(const LWeight& psi);

}  // namespace qloop::lweights
