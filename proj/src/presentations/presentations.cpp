#include "presentations/presentations.hpp"

namespace qloop::presentations {

using coeff::kappa;
using coeff::qfactorial;
using linop::ModuleKind;
using linop::WeightModule;

int rank(Algebra a) { return a == Algebra::Sl2 ? 1 : 2; }

int cartan(Algebra a, int i, int j) {
  if (i == j) return 2;
  return a == Algebra::Sl2 ? -2 : -1;
}

std::string algebra_name(Algebra a) { return a == Algebra::Sl2 ? "sl2" : "sl3"; }

const Operator& GeneratorImages::f_image(int i) const {
  if (scope != Scope::Full) throw UsageError("f images are not available in Borel scope");
  return f.at(static_cast<std::size_t>(i));
}

namespace {

Operator kpow(const ModulePtr& m, std::array<int, 3> nu) {
  if (m->arity() == 1) return linop::gl2_qK(m, {nu[0], nu[1]});
  return linop::gl3_qK(m, nu);
}

bool is_gl2(const ModulePtr& m) { return m->kind() == ModuleKind::VermaGl2 || m->kind() == ModuleKind::FiniteGl2; }
bool is_gl3(const ModulePtr& m) { return m->kind() == ModuleKind::VermaGl3 || m->kind() == ModuleKind::FiniteGl3; }

std::size_t wrap(int i, int n) { return static_cast<std::size_t>(((i % n) + n) % n); }

}  // namespace

GeneratorImages jimbo_sl2(const ModulePtr& m) {
  if (!is_gl2(m)) throw UsageError("jimbo_sl2 needs a gl2 module");
  GeneratorImages g;
  g.algebra = Algebra::Sl2;
  g.carrier = m;
  const Operator E = linop::gl2_E(m), F = linop::gl2_F(m);
  g.e = {F * kpow(m, {1, 1, 0}), E};
  g.f = {E * kpow(m, {-1, -1, 0}), F};
  g.qh = {kpow(m, {-1, 1, 0}), kpow(m, {1, -1, 0})};
  g.qh_inv = {kpow(m, {1, -1, 0}), kpow(m, {-1, 1, 0})};
  g.o = {0, 1};
  g.name = "eval-sl2";
  return g;
}

GeneratorImages jimbo_sl3(const ModulePtr& m) {
  if (!is_gl3(m)) throw UsageError("jimbo_sl3 needs a gl3 module");
  GeneratorImages g;
  g.algebra = Algebra::Sl3;
  g.carrier = m;
  g.e = {linop::gl3_F(m, 3) * kpow(m, {1, 0, 1}), linop::gl3_E(m, 1), linop::gl3_E(m, 2)};
  g.f = {linop::gl3_E(m, 3) * kpow(m, {-1, 0, -1}), linop::gl3_F(m, 1), linop::gl3_F(m, 2)};
  g.qh = {kpow(m, {-1, 0, 1}), kpow(m, {1, -1, 0}), kpow(m, {0, 1, -1})};
  g.qh_inv = {kpow(m, {1, 0, -1}), kpow(m, {-1, 1, 0}), kpow(m, {0, -1, 1})};
  g.o = {0, 1, -1};
  g.name = "eval-sl3";
  return g;
}

GeneratorImages borel(GeneratorImages g) {
  g.scope = Scope::BorelPlus;
  g.f.clear();
  return g;
}

GeneratorImages osc_rho_sl2(const ModulePtr& w) {
  if (w->kind() != ModuleKind::OscPlus && w->kind() != ModuleKind::OscMinus)
    throw UsageError("osc_rho_sl2 needs an oscillator module");
  GeneratorImages g;
  g.algebra = Algebra::Sl2;
  g.scope = Scope::BorelPlus;
  g.carrier = w;
  g.e = {linop::osc_bdag(w), (linop::osc_b(w) * linop::osc_qN(w, 1)).scaled(-kappa().inverse())};
  g.qh = {linop::osc_qN(w, 2), linop::osc_qN(w, -2)};
  g.qh_inv = {linop::osc_qN(w, -2), linop::osc_qN(w, 2)};
  g.o = {0, 1};
  g.name = "rho-sl2";
  return g;
}

GeneratorImages osc_rho_sl3(const ModulePtr& t) {
  if (t->kind() != ModuleKind::Tensor || t->factors().size() != 2) throw UsageError("osc_rho_sl3 needs W x W");
  const ModulePtr& w1 = t->factors()[0];
  const ModulePtr& w2 = t->factors()[1];
  for (const auto& w : {w1, w2})
    if (w->kind() != ModuleKind::OscPlus && w->kind() != ModuleKind::OscMinus)
      throw UsageError("osc_rho_sl3 needs oscillator factors");
  auto qN = [&](int n1, int n2) { return linop::tensor_op(t, linop::osc_qN(w1, n1), linop::osc_qN(w2, n2)); };
  const Operator b1 = linop::lift_left(t, linop::osc_b(w1));
  const Operator b1d = linop::lift_left(t, linop::osc_bdag(w1));
  const Operator b2 = linop::lift_right(t, linop::osc_b(w2));
  const Operator b2d = linop::lift_right(t, linop::osc_bdag(w2));
  GeneratorImages g;
  g.algebra = Algebra::Sl3;
  g.scope = Scope::BorelPlus;
  g.carrier = t;
  g.e = {b1d * qN(0, 1), (b1 * b2d * qN(1, -1)).scaled(-Field::q(-1)), (b2 * qN(0, 1)).scaled(-kappa().inverse())};
  g.qh = {qN(2, 1), qN(-1, 1), qN(-1, -2)};
  g.qh_inv = {qN(-2, -1), qN(1, -1), qN(1, 2)};
  g.o = {0, 1, -1};
  g.name = "rho-sl3";
  return g;
}

GeneratorImages twist_sigma(const GeneratorImages& g, int power) {
  const int n = static_cast<int>(g.nodes());
  GeneratorImages r = g;
  for (int i = 0; i < n; ++i) {
    const std::size_t src = wrap(i + power, n);
    r.e[i] = g.e[src];
    r.qh[i] = g.qh[src];
    r.qh_inv[i] = g.qh_inv[src];
    if (g.scope == Scope::Full) r.f[i] = g.f[src];
  }
  r.name = g.name + ".sigma^" + std::to_string(power);
  return r;
}

GeneratorImages twist_tau(const GeneratorImages& g) {
  const int l = g.rank();
  GeneratorImages r = g;
  for (int i = 1; i <= l; ++i) {
    const int src = l - i + 1;
    r.e[i] = g.e[src];
    r.qh[i] = g.qh[src];
    r.qh_inv[i] = g.qh_inv[src];
    if (g.scope == Scope::Full) r.f[i] = g.f[src];
  }
  r.name = g.name + ".tau";
  return r;
}

GeneratorImages spectral_twist(const GeneratorImages& g, const std::vector<int>& s, Var marker) {
  if (s.size() != g.nodes()) throw UsageError("spectral twist needs one exponent per node");
  GeneratorImages r = g;
  for (std::size_t i = 0; i < g.nodes(); ++i) {
    r.e[i] = g.e[i].scaled(Field::var(marker, s[i]));
    if (g.scope == Scope::Full) r.f[i] = g.f[i].scaled(Field::var(marker, -s[i]));
  }
  r.name = g.name + ".twist(" + std::string(coeff::var_name(marker)) + ")";
  return r;
}

GeneratorImages shift(const GeneratorImages& g, const std::vector<coeff::QExponent>& xi,
                      const coeff::LambdaSpec& spec) {
  if (g.scope != Scope::BorelPlus) throw UsageError("shifted modules are Borel representations");
  if (xi.size() != static_cast<std::size_t>(g.rank())) throw UsageError("shift needs one value per node 1..l");
  GeneratorImages r = g;
  coeff::QExponent total;
  for (std::size_t i = 1; i < g.nodes(); ++i) {
    const Field c = coeff::qpow(xi[i - 1], spec);
    r.qh[i] = g.qh[i].scaled(c);
    r.qh_inv[i] = g.qh_inv[i].scaled(c.inverse());
    total = total + xi[i - 1];
  }
  const Field c0 = coeff::qpow(-total, spec);
  r.qh[0] = g.qh[0].scaled(c0);
  r.qh_inv[0] = g.qh_inv[0].scaled(c0.inverse());
  r.name = g.name + ".shift";
  return r;
}

GeneratorImages theta_sl2(int a, int M) {
  if (a == 1) {
    GeneratorImages g = twist_sigma(osc_rho_sl2(WeightModule::oscillator(false, M)), -1);
    g.name = "theta1-sl2";
    return g;
  }
  if (a == 2) {
    GeneratorImages g = osc_rho_sl2(WeightModule::oscillator(true, M));
    g.name = "theta2-sl2";
    return g;
  }
  throw UsageError("sl2 oscillator representations are theta1 and theta2");
}

GeneratorImages theta_sl3(int a, bool barred, int M) {
  // chi assignments per representation: (first, second) oscillator is W+?
  std::array<bool, 2> plus{};
  int sigma = 0;
  switch (a) {
    case 1:
      plus = barred ? std::array{true, true} : std::array{false, false};
      sigma = barred ? 0 : -1;
      break;
    case 2:
      plus = {false, true};
      sigma = -2;
      break;
    case 3:
      plus = barred ? std::array{false, false} : std::array{true, true};
      sigma = barred ? -1 : 0;
      break;
    default:
      throw UsageError("sl3 oscillator representations are theta1, theta2, theta3");
  }
  const ModulePtr w1 = WeightModule::oscillator(plus[0], M);
  const ModulePtr w2 = WeightModule::oscillator(plus[1], M);
  GeneratorImages g = osc_rho_sl3(WeightModule::tensor(w1, w2, M));
  if (sigma != 0) g = twist_sigma(g, sigma);
  if (barred) g = twist_tau(g);
  g.name = std::string(barred ? "theta-bar" : "theta") + std::to_string(a) + "-sl3";
  return g;
}

GeneratorImages tensor(const GeneratorImages& a, const GeneratorImages& b, int bound) {
  if (a.algebra != b.algebra) throw UsageError("tensor factors represent different algebras");
  const ModulePtr t = WeightModule::tensor(a.carrier, b.carrier, bound);
  GeneratorImages r;
  r.algebra = a.algebra;
  r.scope = (a.scope == Scope::Full && b.scope == Scope::Full) ? Scope::Full : Scope::BorelPlus;
  r.carrier = t;
  r.o = a.o;
  r.name = "(" + a.name + " x " + b.name + ")";
  for (std::size_t i = 0; i < a.nodes(); ++i) {
    r.e.push_back(linop::lift_left(t, a.e[i]) + linop::tensor_op(t, a.qh[i], b.e[i]));
    r.qh.push_back(linop::tensor_op(t, a.qh[i], b.qh[i]));
    r.qh_inv.push_back(linop::tensor_op(t, a.qh_inv[i], b.qh_inv[i]));
    if (r.scope == Scope::Full)
      r.f.push_back(linop::tensor_op(t, a.f[i], b.qh_inv[i]) + linop::lift_right(t, b.f[i]));
  }
  return r;
}

namespace {

// sum_{n=0}^{1-a_ij} (-1)^n x_i^{(1-a_ij-n)} x_j x_i^{(n)}
Operator serre(const Operator& xi, const Operator& xj, int aij) {
  const int top = 1 - aij;
  const ModulePtr& m = xi.module();
  std::vector<Operator> pw{Operator::identity(m)};
  for (int k = 1; k <= top; ++k) pw.push_back(xi * pw.back());
  std::vector<std::pair<Field, Operator>> terms;
  for (int n = 0; n <= top; ++n) {
    const Field c = Field(n % 2 ? -1 : 1) / (qfactorial(top - n) * qfactorial(n));
    terms.emplace_back(c, pw[top - n] * xj * pw[n]);
  }
  return Operator::linear_combination(m, terms);
}

}  // namespace

std::vector<RelationCheck> check_defining_relations(const GeneratorImages& g, const std::vector<std::size_t>& cols) {
  std::vector<RelationCheck> out;
  const ModulePtr& m = g.carrier;
  const Operator one = Operator::identity(m);
  const Operator zero = Operator::zero(m);
  const int n = static_cast<int>(g.nodes());
  const bool full = g.scope == Scope::Full;
  auto add = [&](std::string name, const Operator& a, const Operator& b) {
    out.push_back({std::move(name), linop::compare_on(a, b, cols)});
  };
  auto ij = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };

  Operator central = one;
  for (int i = 0; i < n; ++i) {
    add("q^h_i q^-h_i = 1, i=" + std::to_string(i), g.qh[i] * g.qh_inv[i], one);
    central = central * g.qh[i];
    for (int j = i + 1; j < n; ++j) add("q^h commute " + ij(i, j), g.qh[i] * g.qh[j], g.qh[j] * g.qh[i]);
  }
  add("central element", central, one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Field c = Field::q(cartan(g.algebra, j, i));
      add("q^h_j e_i q^-h_j " + ij(i, j), g.qh[j] * g.e[i] * g.qh_inv[j], g.e[i].scaled(c));
      if (full) add("q^h_j f_i q^-h_j " + ij(i, j), g.qh[j] * g.f[i] * g.qh_inv[j], g.f[i].scaled(c.inverse()));
    }
  if (full)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Operator rhs = i == j ? (g.qh[i] - g.qh_inv[i]).scaled(kappa().inverse()) : zero;
        add("[e_i, f_j] " + ij(i, j), linop::commutator(g.e[i], g.f[j]), rhs);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int a = cartan(g.algebra, i, j);
      add("Serre e " + ij(i, j), serre(g.e[i], g.e[j], a), zero);
      if (full) add("Serre f " + ij(i, j), serre(g.f[i], g.f[j], a), zero);
    }
  return out;
}

}  // namespace qloop::presentations
