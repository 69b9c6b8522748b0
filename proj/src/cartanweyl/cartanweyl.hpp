#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "presentations/presentations.hpp"

namespace qloop::cartanweyl {

using coeff::Field;
using linop::Operator;
using linop::OpSeries;
using presentations::Algebra;
using presentations::GeneratorImages;

/// Element of the affine root lattice, as coefficients of alpha_0..alpha_l.
using AffineRoot = std::vector<int>;

class RootLattice {
 public:
  explicit RootLattice(Algebra a);
  Algebra algebra() const { return algebra_; }
  int rank() const { return presentations::rank(algebra_); }
  /// (a|b) through the affine Cartan matrix.
  int form(const AffineRoot& a, const AffineRoot& b) const;
  AffineRoot delta() const;
  AffineRoot simple(int i) const;
  /// Positive roots of the finite root system (alpha_0 coefficient 0), in
  /// the normal order used here: sl2 {alpha}, sl3 {alpha1, alpha1+alpha2, alpha2}.
  const std::vector<AffineRoot>& finite_positive() const { return finite_; }
  /// gamma + n delta and (delta - gamma) + n delta.
  AffineRoot real(const AffineRoot& gamma, int n) const;
  AffineRoot dual(const AffineRoot& gamma, int n) const;
  int height(const AffineRoot& gamma) const;
  std::string render(const AffineRoot& r) const;

 private:
  Algebra algebra_;
  std::vector<AffineRoot> finite_;
};

/// Root-vector sign: e (positive roots) or f (negative roots).
enum class Side { E, F };

/// q-commutator of root vectors with roots a, b (both positive for E, both
/// the negatives of a, b for F): ab - q^{-(a|b)} ba, resp. ab - q^{(a|b)} ba.
/// The F variant takes the positive roots a, b whose negatives the operators
/// carry; (-a|-b) = (a|b).
Operator qcommutator(const Operator& x, const AffineRoot& a, const Operator& y, const AffineRoot& b,
                     const RootLattice& lattice, Side side);

/// Operand order in the recursions for e_{gamma+n delta}, e_{(delta-gamma)+n delta}
/// and their f counterparts. Normal: the earlier root in the normal order
/// comes first, e.g. e_{gamma+n delta} = [2]^{-1} [e_{gamma+(n-1)delta}, e'_{delta,gamma}]_q.
/// Swapped: the opposite operand order. The two differ by (-1)^n on these
/// vectors; only Normal satisfies the Drinfeld relations and the closed-form
/// l-weights.
enum class RecursionOrder { Normal, Swapped };

/// Root vectors of a representation, built lazily and memoized. All
/// operators are lazy too, so requesting a root vector only builds its
/// expression graph.
class RootVectorTable {
 public:
  explicit RootVectorTable(GeneratorImages g, RecursionOrder order = RecursionOrder::Normal);

  const GeneratorImages& images() const { return g_; }
  const RootLattice& lattice() const { return lattice_; }

  /// e_{gamma + n delta}, e_{(delta - gamma) + n delta}, e'_{n delta, gamma}
  /// (n >= 1 for the primed ones); gamma a finite positive root.
  Operator e_real(const AffineRoot& gamma, int n);
  Operator e_dual(const AffineRoot& gamma, int n);
  Operator e_prime(const AffineRoot& gamma, int n);
  Operator f_real(const AffineRoot& gamma, int n);
  Operator f_dual(const AffineRoot& gamma, int n);
  Operator f_prime(const AffineRoot& gamma, int n);

  /// e'_{delta,gamma}(u) = sum_{n=1}^{N} e'_{n delta, gamma} u^n (constant 0),
  /// and the f counterpart in u^{-1}.
  OpSeries e_prime_series(const AffineRoot& gamma, int N);
  OpSeries f_prime_series(const AffineRoot& gamma, int N);
  /// Unprimed imaginary root vectors from the logarithm relation.
  OpSeries e_imag_series(const AffineRoot& gamma, int N);
  OpSeries f_imag_series(const AffineRoot& gamma, int N);

  /// phi_i^+(u) and phi_i^-(u^{-1}) to order N (i = 1..l).
  OpSeries phi_plus(int i, int N);
  OpSeries phi_minus(int i, int N);

  /// Second Drinfeld realization generators.
  Operator xi_plus(int i, int n);
  Operator xi_minus(int i, int n);
  Operator chi(int i, int n);
  /// phi^{+}_{i,n} (n >= 0) and phi^{-}_{i,n} (n <= 0); zero outside.
  Operator phi_coefficient(bool plus, int i, int n);

 private:
  enum class Kind { Real, Dual, Prime };
  using Key = std::tuple<Side, Kind, AffineRoot, int>;

  Operator finite_root(Side s, const AffineRoot& gamma);
  Operator dual_finite(Side s, const AffineRoot& gamma);
  Operator lookup(Side s, Kind k, const AffineRoot& gamma, int n);
  Operator build(Side s, Kind k, const AffineRoot& gamma, int n);
  const Operator& side_image(Side s, int i) const;
  OpSeries imag_series(Side s, const AffineRoot& gamma, int N);
  Operator build_phi(bool plus, int i, int n);
  int o(int i) const { return g_.o.at(static_cast<std::size_t>(i)); }

  GeneratorImages g_;
  RootLattice lattice_;
  RecursionOrder order_;
  std::recursive_mutex mu_;
  std::map<Key, Operator> cache_;
  std::map<std::tuple<Side, AffineRoot>, OpSeries> imag_cache_;
  std::map<std::tuple<bool, int, int>, Operator> phi_cache_;
};

/// The Drinfeld relations [chi_{i,n}, chi_{j,k}] = 0,
/// [chi_{i,n}, xi^{+-}_{j,k}] = +-(1/n)[n b_ij]_q xi^{+-}_{j,n+k} and
/// [xi^+_{i,n}, xi^-_{j,k}] = delta_ij (phi^+_{i,n+k} - phi^-_{i,n+k}) / (q - q^{-1})
/// for |n|, |k| <= nmax, compared on `columns`. A non-negative `max_sum`
/// also bounds |n + k|.
std::vector<presentations::RelationCheck> check_drinfeld_relations(RootVectorTable& t, int nmax,
                                                                   const std::vector<std::size_t>& columns,
                                                                   int max_sum = -1);

}  // namespace qloop::cartanweyl
