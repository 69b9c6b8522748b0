#pragma once

#include <vector>

#include "presentations/presentations.hpp"

namespace qloop::gauss {

using linop::ModulePtr;
using linop::Operator;
using linop::OpSeries;
using presentations::Algebra;

/// Which Gauss family: the N entries (series in u, for phi+) or the O entries
/// (series in u^{-1}, for phi-).
enum class Family { N, O };

/// Entries X^{(p)}_{jk}(u) of the Gauss decomposition of an evaluation module,
/// j, k = 1..l+1. Level p = 1 holds the primed entries; level p + 1 is the
/// Schur complement
///   X^{(p+1)}_{jk} = X^{(p)}_{jk} - c X^{(p)}_{jp} X^{(p)}_{pp}^{-1} X^{(p)}_{pk},
/// for j, k > p. In the N family c = u for j >= k and c = 1 for j < k. In the
/// O family c = u^{-1} for j <= k and c = 1 for j > k; this is the placement
/// for which phi_2^- agrees with the root-vector construction.
class GaussFamily {
 public:
  /// Throws UsageError unless `module` is a gl2/gl3 Verma or finite module.
  GaussFamily(const ModulePtr& module, Family family, int order);

  Algebra algebra() const { return algebra_; }
  Family family() const { return family_; }
  int order() const { return order_; }
  /// X^{(level)}_{jk}, 1 <= level <= min(j, k).
  const OpSeries& entry(int level, int j, int k) const;

 private:
  ModulePtr module_;
  Algebra algebra_;
  Family family_;
  int order_;
  int size_;
  std::vector<std::vector<std::vector<OpSeries>>> levels_;  // [level-1][j-1][k-1]
};

/// phi_i^+(u) from the N family: q^{K_i - K_{i+1}} X^{(i)}_{ii}^{-1}(q^{i+1} u) X^{(i+1)}_{i+1,i+1}(q^{i+1} u).
OpSeries gauss_phi_plus(const ModulePtr& module, int i, int order);
/// phi_i^-(u^{-1}) from the O family: q^{-K_i + K_{i+1}} X^{(i+1)}_{i+1,i+1}(q^{-i-1} u^{-1}) X^{(i)}_{ii}^{-1}(q^{-i-1} u^{-1}).
OpSeries gauss_phi_minus(const ModulePtr& module, int i, int order);

}  // namespace qloop::gauss
