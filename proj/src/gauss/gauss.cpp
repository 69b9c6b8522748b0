#include "gauss/gauss.hpp"

#include "coeff/qnumbers.hpp"

namespace qloop::gauss {

using coeff::Field;
using coeff::kappa;
using linop::ModuleKind;
using series::Direction;

namespace {

struct EvalOps {
  ModulePtr m;
  int size = 0;  // l + 1

  // q^{sum nu_j K_j}
  Operator qK(std::vector<int> nu) const {
    if (size == 2) return linop::gl2_qK(m, {nu[0], nu[1]});
    return linop::gl3_qK(m, {nu[0], nu[1], nu[2]});
  }
  Operator qK_pair(int j, int k, int power) const {
    std::vector<int> nu(static_cast<std::size_t>(size), 0);
    nu[static_cast<std::size_t>(j - 1)] += power;
    nu[static_cast<std::size_t>(k - 1)] += power;
    return qK(nu);
  }
  // E_{jk}, F_{jk} for j < k: (1,2) -> 1, (2,3) -> 2, (1,3) -> 3.
  static int root_index(int j, int k) { return (j == 1 && k == 3) ? 3 : j; }
  Operator E(int j, int k) const { return size == 2 ? linop::gl2_E(m) : linop::gl3_E(m, root_index(j, k)); }
  Operator F(int j, int k) const { return size == 2 ? linop::gl2_F(m) : linop::gl3_F(m, root_index(j, k)); }
};

EvalOps eval_ops(const ModulePtr& m) {
  switch (m->kind()) {
    case ModuleKind::VermaGl2:
    case ModuleKind::FiniteGl2:
      return {m, 2};
    case ModuleKind::VermaGl3:
    case ModuleKind::FiniteGl3:
      return {m, 3};
    default:
      throw UsageError("the Gauss path needs a gl2 or gl3 evaluation module");
  }
}

// Primed entry (j, k).
OpSeries primed(const EvalOps& ev, Family fam, int j, int k, int order) {
  const ModulePtr& m = ev.m;
  const Direction dir = fam == Family::N ? Direction::Plus : Direction::Minus;
  const Operator one = Operator::identity(m);
  if (j == k) {
    std::vector<int> nu(static_cast<std::size_t>(ev.size), 0);
    nu[static_cast<std::size_t>(j - 1)] = fam == Family::N ? 2 : -2;
    return OpSeries::affine(dir, one, -ev.qK(nu), order);
  }
  Operator c;
  if (fam == Family::N) {
    // N'_{jk} = -kappa q^{-1} F_{jk} q^{K_j + K_k} (j < k), N'_{kj} = -kappa E_{jk}
    if (j < k)
      c = (ev.F(j, k) * ev.qK_pair(j, k, 1)).scaled(-kappa() * Field::q(-1));
    else
      c = ev.E(k, j).scaled(-kappa());
  } else {
    // O'_{jk} = kappa F_{jk} (j < k), O'_{kj} = kappa q q^{-K_j - K_k} E_{jk}
    if (j < k)
      c = ev.F(j, k).scaled(kappa());
    else
      c = (ev.qK_pair(j, k, -1) * ev.E(k, j)).scaled(kappa() * Field::q(1));
  }
  return OpSeries::constant(dir, c, order);
}

}  // namespace

GaussFamily::GaussFamily(const ModulePtr& module, Family family, int order)
    : module_(module), family_(family), order_(order) {
  if (order < 0) throw UsageError("series order must be non-negative");
  const EvalOps ev = eval_ops(module);
  size_ = ev.size;
  algebra_ = size_ == 2 ? Algebra::Sl2 : Algebra::Sl3;
  const auto n = static_cast<std::size_t>(size_);
  levels_.assign(n, std::vector<std::vector<OpSeries>>(n, std::vector<OpSeries>(n)));
  for (int j = 1; j <= size_; ++j)
    for (int k = 1; k <= size_; ++k) levels_[0][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
        primed(ev, family, j, k, order);
  for (int p = 1; p < size_; ++p) {
    const auto& X = levels_[static_cast<std::size_t>(p - 1)];
    auto& Y = levels_[static_cast<std::size_t>(p)];
    const auto pi = static_cast<std::size_t>(p - 1);
    const OpSeries pivot_inv = X[pi][pi].inverse();
    for (int j = p + 1; j <= size_; ++j)
      for (int k = p + 1; k <= size_; ++k) {
        const auto ji = static_cast<std::size_t>(j - 1), ki = static_cast<std::size_t>(k - 1);
        OpSeries corr = X[ji][pi] * pivot_inv * X[pi][ki];
        if (family == Family::N ? j >= k : j <= k) corr = corr.shifted();
        Y[ji][ki] = X[ji][ki] - corr;
      }
  }
}

const OpSeries& GaussFamily::entry(int level, int j, int k) const {
  if (level < 1 || level > std::min(j, k) || j < 1 || k < 1 || j > size_ || k > size_)
    throw UsageError("Gauss entry index out of range");
  return levels_[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
}

namespace {

Operator cartan_ratio(const EvalOps& ev, int i, int sign) {
  std::vector<int> nu(static_cast<std::size_t>(ev.size), 0);
  nu[static_cast<std::size_t>(i - 1)] = sign;
  nu[static_cast<std::size_t>(i)] = -sign;
  return ev.qK(nu);
}

void check_node(const EvalOps& ev, int i) {
  if (i < 1 || i >= ev.size) throw UsageError("phi is indexed by i = 1..l");
}

}  // namespace

OpSeries gauss_phi_plus(const ModulePtr& module, int i, int order) {
  const EvalOps ev = eval_ops(module);
  check_node(ev, i);
  const GaussFamily g(module, Family::N, order);
  const Field s = Field::q(i + 1);
  const OpSeries a = g.entry(i, i, i).inverse().rescaled(s);
  const OpSeries b = g.entry(i + 1, i + 1, i + 1).rescaled(s);
  return (a * b).left_mul(cartan_ratio(ev, i, 1));
}

OpSeries gauss_phi_minus(const ModulePtr& module, int i, int order) {
  const EvalOps ev = eval_ops(module);
  check_node(ev, i);
  const GaussFamily g(module, Family::O, order);
  const Field s = Field::q(-(i + 1));
  const OpSeries a = g.entry(i + 1, i + 1, i + 1).rescaled(s);
  const OpSeries b = g.entry(i, i, i).inverse().rescaled(s);
  return (a * b).left_mul(cartan_ratio(ev, i, -1));
}

}  // namespace qloop::gauss
