#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coeff/qnumbers.hpp"
#include "linop/operator.hpp"

namespace qloop::linop {

using coeff::LambdaSpec;
using coeff::QExponent;

enum class ModuleKind { VermaGl2, VermaGl3, FiniteGl2, FiniteGl3, OscPlus, OscMinus, Tensor };

/// Multi-index labelling a basis vector: m for gl2, (m1, m2, m3) for gl3, the
/// occupation numbers for oscillators, concatenations for tensor products.
using BasisIndex = std::vector<int>;

inline int total_degree(const BasisIndex& m) {
  int s = 0;
  for (int x : m) s += x;
  return s;
}

/// Module with an explicit (truncated) monomial basis. Truncated modules keep
/// the basis vectors of total degree <= bound; images leaving that set are
/// flagged as escaped. Finite modules instead drop vectors outside their
/// basis (they vanish).
class WeightModule {
 public:
  enum class Target { Inside, Reduces, Vanishes, Escapes };
  using Expansion = std::vector<std::pair<std::size_t, Field>>;

  ModuleKind kind() const { return kind_; }
  int bound() const { return bound_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t arity() const { return arity_; }
  bool is_finite() const { return finite_; }
  const LambdaSpec& lambda() const { return lambda_; }
  const BasisIndex& index(std::size_t pos) const { return basis_[pos]; }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  std::optional<std::size_t> find(const BasisIndex& m) const;
  /// Where a (possibly out-of-range) index lands. For finite modules an index
  /// outside the basis either vanishes or is congruent, modulo the maximal
  /// submodule, to the combination stored in *expansion.
  Target resolve(const BasisIndex& m, std::size_t* pos, const Expansion** expansion = nullptr) const;
  const Grading& grading(std::size_t pos) const { return grading_[pos]; }
  std::size_t grading_size() const { return grading_size_; }
  const std::vector<ModulePtr>& factors() const { return factors_; }
  /// Tensor modules: factor positions of a basis vector, and the inverse map.
  std::pair<std::size_t, std::size_t> tensor_pair(std::size_t pos) const { return pairs_[pos]; }
  std::optional<std::size_t> tensor_position(std::size_t left, std::size_t right) const;
  std::string describe() const;
  std::string render_index(const BasisIndex& m) const;
  /// Positions with total degree <= d.
  std::vector<std::size_t> positions_up_to_degree(int d) const;

  // Factories.
  static ModulePtr verma_gl2(const LambdaSpec& lambda, int bound);
  static ModulePtr verma_gl3(const LambdaSpec& lambda, int bound);
  /// Finite-dimensional module of dominant integral highest weight: the Verma
  /// module modulo its maximal submodule. The basis is a subset of the Verma
  /// basis (chosen lex-first per weight space); other Verma basis vectors
  /// reduce to combinations of it, or to zero.
  static ModulePtr finite_gl2(std::array<int, 2> lambda);
  static ModulePtr finite_gl3(std::array<int, 3> lambda);
  static ModulePtr oscillator(bool plus, int bound);
  /// Tensor product with combined total-degree bound.
  static ModulePtr tensor(const ModulePtr& a, const ModulePtr& b, int bound);

 private:
  WeightModule() = default;
  void index_basis();
  void build_quotient(const std::vector<std::vector<BasisIndex>>& weight_spaces,
                      const std::function<std::vector<std::pair<BasisIndex, Field>>(const BasisIndex&)>& raise);

  ModuleKind kind_ = ModuleKind::VermaGl2;
  int bound_ = 0;
  std::size_t arity_ = 1;
  bool finite_ = false;
  LambdaSpec lambda_;
  std::vector<BasisIndex> basis_;
  std::vector<Grading> grading_;
  std::size_t grading_size_ = 0;
  std::map<BasisIndex, std::size_t> lookup_;
  std::vector<ModulePtr> factors_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<long> pair_lookup_;
  std::map<BasisIndex, Expansion> reduction_;
};

// Raw actions on basis indices (before the vanishing/escape rule): lists of
// (target index, coefficient). Used both by the operators and by the
// construction of finite modules.
std::vector<std::pair<BasisIndex, Field>> gl2_E_images(const LambdaSpec& l, const BasisIndex& m);
std::vector<std::pair<BasisIndex, Field>> gl2_F_images(const BasisIndex& m);
std::vector<std::pair<BasisIndex, Field>> gl3_E_images(const LambdaSpec& l, int i, const BasisIndex& m);
std::vector<std::pair<BasisIndex, Field>> gl3_F_images(int i, const BasisIndex& m);

/// Builds a column from (target index, coefficient) pairs, applying the
/// module's vanishing/escape rule.
SparseVec make_column(const WeightModule& m, const std::vector<std::pair<BasisIndex, Field>>& images);

// gl2 modules (Verma or finite): E, F and q^{nu K_i}.
Operator gl2_E(const ModulePtr& m);
Operator gl2_F(const ModulePtr& m);
/// q^{sum_i nu[i] K_{i+1}}
Operator gl2_qK(const ModulePtr& m, std::array<int, 2> nu);

// gl3 modules: E_i, F_i (i = 1, 2, 3; index 3 is the composite root) and
// q^{sum_i nu[i] K_{i+1}}.
Operator gl3_E(const ModulePtr& m, int i);
Operator gl3_F(const ModulePtr& m, int i);
Operator gl3_qK(const ModulePtr& m, std::array<int, 3> nu);

// Oscillator modules: b, b^dagger, q^{nu N}.
Operator osc_b(const ModulePtr& m);
Operator osc_bdag(const ModulePtr& m);
Operator osc_qN(const ModulePtr& m, int nu);

/// a (x) b on a tensor module whose factors are the modules of a and b.
Operator tensor_op(const ModulePtr& t, const Operator& a, const Operator& b);
/// a (x) 1 and 1 (x) b.
Operator lift_left(const ModulePtr& t, const Operator& a);
Operator lift_right(const ModulePtr& t, const Operator& b);

}  // namespace qloop::linop
