#include "lweights/catalog.hpp"

#include <algorithm>

namespace qloop::lweights {

using coeff::LambdaSpec;
using coeff::Monomial;
using coeff::QExponent;
using coeff::Var;

namespace {

// q^{c + l1 lambda1 + l2 lambda2 + l3 lambda3}
Field qe(const LambdaSpec& s, int c, int l1 = 0, int l2 = 0, int l3 = 0) {
  return coeff::qpow(QExponent{c, {l1, l2, l3}}, s);
}

FactoredRational fr(Direction d, Field c, std::vector<LinearFactor> f) {
  return FactoredRational{d, std::move(c), std::move(f)}.normalized();
}

constexpr Direction P = Direction::Plus;
constexpr Direction M = Direction::Minus;

ClosedForm sl2_eval(const BasisIndex& v, const LambdaSpec& s) {
  const int m = v[0];
  ClosedForm out;
  out.plus.push_back(fr(P, qe(s, -2 * m, 1, -1),
                        {{qe(s, 2, 2), 1}, {qe(s, 0, 0, 2), 1}, {qe(s, 2 - 2 * m, 2), -1}, {qe(s, -2 * m, 2), -1}}));
  out.minus.push_back(fr(M, qe(s, 2 * m, -1, 1),
                         {{qe(s, -2, -2), 1}, {qe(s, 0, 0, -2), 1}, {qe(s, -2 + 2 * m, -2), -1}, {qe(s, 2 * m, -2), -1}}));
  return out;
}

ClosedForm sl3_eval(const BasisIndex& v, const LambdaSpec& s) {
  const int m1 = v[0], m2 = v[1], m3 = v[2];
  ClosedForm out;
  out.plus.push_back(fr(P, qe(s, -2 * m1 - m2 + m3, 1, -1),
                        {{qe(s, -2 * m2 + 2, 2), 1},
                         {qe(s, -2 * m1 - 2 * m2 + 2, 2), -1},
                         {qe(s, -2 * m3, 0, 2), 1},
                         {qe(s, -2 * m1 - 2 * m2, 2), -1}}));
  out.plus.push_back(fr(P, qe(s, m1 - m2 - 2 * m3, 0, 1, -1),
                        {{qe(s, -2 * m1 - 2 * m2 + 1, 2), 1},
                         {qe(s, -2 * m2 + 1, 2), -1},
                         {qe(s, 3, 2), 1},
                         {qe(s, -2 * m2 + 3, 2), -1},
                         {qe(s, 1, 0, 2), 1},
                         {qe(s, -2 * m3 + 1, 0, 2), -1},
                         {qe(s, -1, 0, 0, 2), 1},
                         {qe(s, -2 * m3 - 1, 0, 2), -1}}));
  out.minus.push_back(fr(M, qe(s, 2 * m1 + m2 - m3, -1, 1),
                         {{qe(s, 2 * m2 - 2, -2), 1},
                          {qe(s, 2 * m1 + 2 * m2 - 2, -2), -1},
                          {qe(s, 2 * m3, 0, -2), 1},
                          {qe(s, 2 * m1 + 2 * m2, -2), -1}}));
  out.minus.push_back(fr(M, qe(s, -m1 + m2 + 2 * m3, 0, -1, 1),
                         {{qe(s, 2 * m1 + 2 * m2 - 1, -2), 1},
                          {qe(s, 2 * m2 - 1, -2), -1},
                          {qe(s, -3, -2), 1},
                          {qe(s, 2 * m2 - 3, -2), -1},
                          {qe(s, -1, 0, -2), 1},
                          {qe(s, 2 * m3 - 1, 0, -2), -1},
                          {qe(s, 1, 0, 0, -2), 1},
                          {qe(s, 2 * m3 + 1, 0, -2), -1}}));
  return out;
}

ClosedForm sl2_theta1(const BasisIndex& v) {
  const int m = v[0];
  return {{fr(P, qe({}, -2 * m - 2), {{Field::q(1), 1}, {Field::q(-2 * m + 1), -1}, {Field::q(-2 * m - 1), -1}})}, {}};
}

ClosedForm sl2_theta2(const BasisIndex& v, FormKind kind) {
  const int m = v[0];
  const Field c = kind == FormKind::Printed ? Field(1) : Field::q(-2 * m);
  return {{fr(P, c, {{Field::q(1), 1}})}, {}};
}

ClosedForm sl3_theta(int a, const BasisIndex& v, FormKind kind) {
  const int m1 = v[0], m2 = v[1];
  auto q = [](int k) { return Field::q(k); };
  switch (a) {
    case 1:
      return {{fr(P, q(-2 * m1 - m2 - 3),
                  {{q(-2 * m2), 1},
                   {q(-2 * m1 - 2 * m2), -1},
                   {kind == FormKind::Printed ? q(2 * m1 - 2 * m2 - 2) : q(-2 * m1 - 2 * m2 - 2), -1}}),
               fr(P, q(m1 - m2), {{q(1), 1}, {q(-2 * m1 - 2 * m2 - 1), 1}, {q(-2 * m2 + 1), -1}, {q(-2 * m2 - 1), -1}})},
              {}};
    case 2:
      return {{fr(P, q(m1 - 2 * m2 + 1), {{q(-2 * m1), 1}}),
               fr(P, q(-2 * m1 + m2 - 2), {{q(1), 1}, {q(-2 * m1 + 1), -1}, {q(-2 * m1 - 1), -1}})},
              {}};
    default:
      return {{fr(P, q(-m1 + m2), {}), fr(P, q(-m1 - 2 * m2), {{q(1), 1}})}, {}};
  }
}

const std::vector<CatalogEntry> kEntries = {
    {"sl2-eval", "sl2 evaluation module, Psi^+ and Psi^- of v_m", 1, true},
    {"sl3-eval", "sl3 evaluation module, Psi_1^{+-} and Psi_2^{+-} of w_m", 3, true},
    {"sl3-eval-tau", "tau-twisted sl3 evaluation module: nodes swapped, u -> -u", 3, true},
    {"sl2-theta1", "sl2 oscillator representation theta_1, Psi^+ of v_m", 1, false},
    {"sl2-theta2", "sl2 oscillator representation theta_2, Psi^+ of v_m", 1, false},
    {"sl3-theta1", "sl3 oscillator representation theta_1, Psi_1^+ and Psi_2^+ of v_m", 2, false},
    {"sl3-theta2", "sl3 oscillator representation theta_2, Psi_1^+ and Psi_2^+ of v_m", 2, false},
    {"sl3-theta3", "sl3 oscillator representation theta_3, Psi_1^+ and Psi_2^+ of v_m", 2, false},
    {"sl3-theta1-bar", "barred theta_1: theta_3 with nodes swapped and u -> -u", 2, false},
    {"sl3-theta2-bar", "barred theta_2: theta_2 with nodes swapped and u -> -u", 2, false},
    {"sl3-theta3-bar", "barred theta_3: theta_1 with nodes swapped and u -> -u", 2, false},
};

const std::vector<TypoEntry> kTypos = {
    {"sl2-theta2-prefactor", "sl2 oscillator representation theta_2, l-weight of v_m", "Psi^+(u) = 1 - q*u",
     "Psi^+(u) = q^(-2*m)*(1 - q*u)", "sl2-theta2", "sl2-theta2"},
    {"sl3-theta1-denominator", "sl3 oscillator representation theta_1, Psi_1^+ of v_m",
     "denominator (1 - q^(-2*m1 - 2*m2)*u)*(1 - q^(2*m1 - 2*m2 - 2)*u)",
     "denominator (1 - q^(-2*m1 - 2*m2)*u)*(1 - q^(-2*m1 - 2*m2 - 2)*u), as the generating function of e'_{delta, alpha_1} gives",
     "sl3-theta1", "sl3-theta1"},
    {"sl3-theta1-denominator-bar", "barred sl3 oscillator representation theta_3 (bar rule applied to theta_1)",
     "Psi_2^+ denominator factor (1 + q^(2*m1 - 2*m2 - 2)*u)", "(1 + q^(-2*m1 - 2*m2 - 2)*u)", "sl3-theta3-bar", "sl3-theta3-bar"},
    {"sl2-theta2-primed-root-vector", "sl2 oscillator representation theta_2, image of e'_delta",
     "e'_delta -> kappa^-1*q", "e'_delta -> -kappa^-1*q (needed for 1 - kappa*E'(u) = 1 + q*u)", "", "sl2-theta2"},
    {"sl3-theta3-subscripts", "sl3 oscillator representation theta_3, images of e'_{n delta}",
     "e'_{n delta, alpha_1} -> 0 listed twice", "second entry is e'_{n delta, alpha_2} -> 0 for n > 1", "", "sl3-theta3"},
    {"sl3-eval-minus-intermediate", "sl3 evaluation module, display preceding the closed form of Psi_2^-",
     "prefactor exponent -2*m3", "prefactor exponent +2*m3 (as in the closed form; selected by Psi^+_0 Psi^-_0 = 1)", "", "sl3-eval"},
    {"factorization-shift-label", "tensor product factorization, shift of the evaluation highest l-weight",
     "xi(h_1) given twice", "second value is xi(h_2) = -lambda_2 + lambda_3 - 2", "", "factorize"},
    {"highest-lweight-condition", "definition of a highest l-weight vector", "zeta^+_{i,n} v = 0",
     "xi^+_{i,n} v = 0", "", ""},
    {"sl2-gauss-inverse", "sl2 evaluation module, phi^+(u) through the Gauss entries",
     "q^(K1-K2) N'_11(q^2 u) N''_22(q^2 u)", "q^(K1-K2) N'_11(q^2 u)^-1 N''_22(q^2 u)", "", "sl2-eval"},
    {"sl3-eval-tau-minus", "sl3 evaluation module twisted by tau, rule for the minus l-weights",
     "Psi^-_i(u^-1) -> Psi^+_(3-i)(-u^-1)", "Psi^-_i(u^-1) -> Psi^-_(3-i)(-u^-1)", "", "sl3-eval-tau"},
};

void check_index(const CatalogEntry& e, const BasisIndex& m) {
  if (m.size() != e.index_size)
    throw UsageError("catalog entry " + e.id + " expects a basis index with " + std::to_string(e.index_size) +
                     " components");
}

}  // namespace

LWeight ClosedForm::as_lweight() const {
  LWeight w;
  for (const auto& f : plus) w.plus.push_back(f.to_form());
  for (const auto& f : minus) w.minus.push_back(f.to_form());
  return w;
}

const std::vector<CatalogEntry>& catalog_entries() { return kEntries; }

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : kEntries)
    if (e.id == id) return e;
  throw UsageError("unknown catalog id '" + id + "'");
}

ClosedForm swap_nodes_negate(const ClosedForm& f) {
  ClosedForm out;
  for (auto it = f.plus.rbegin(); it != f.plus.rend(); ++it) out.plus.push_back(it->scaled_argument(Field(-1)).normalized());
  for (auto it = f.minus.rbegin(); it != f.minus.rend(); ++it) out.minus.push_back(it->scaled_argument(Field(-1)).normalized());
  return out;
}

ClosedForm closed_form(const std::string& id, const BasisIndex& m, const LambdaSpec& lambda, FormKind kind) {
  const CatalogEntry& e = catalog_entry(id);
  check_index(e, m);
  if (id == "sl2-eval") return sl2_eval(m, lambda);
  if (id == "sl3-eval") return sl3_eval(m, lambda);
  if (id == "sl3-eval-tau") return swap_nodes_negate(sl3_eval(m, lambda));
  if (id == "sl2-theta1") return sl2_theta1(m);
  if (id == "sl2-theta2") return sl2_theta2(m, kind);
  if (id == "sl3-theta1") return sl3_theta(1, m, kind);
  if (id == "sl3-theta2") return sl3_theta(2, m, kind);
  if (id == "sl3-theta3") return sl3_theta(3, m, kind);
  if (id == "sl3-theta1-bar") return swap_nodes_negate(sl3_theta(3, m, kind));
  if (id == "sl3-theta2-bar") return swap_nodes_negate(sl3_theta(2, m, kind));
  return swap_nodes_negate(sl3_theta(1, m, kind));
}

RationalForm scale_argument(const RationalForm& r, const Field& s) {
  RationalForm out = r;
  Field p(1);
  const std::size_t n = std::max(out.num.size(), out.den.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k < out.num.size()) out.num[k] *= p;
    if (k < out.den.size()) out.den[k] *= p;
    p *= s;
  }
  return out;
}

LWeight spectral_substitute(const LWeight& w, const Field& s) {
  LWeight out;
  for (const auto& r : w.plus) out.plus.push_back(scale_argument(r, s));
  for (const auto& r : w.minus) out.minus.push_back(scale_argument(r, s.inverse()));
  return out;
}

ClosedForm triple_tensor_highest() {
  const Field z1 = Field::var(Var::zeta1), z2 = Field::var(Var::zeta2), z3 = Field::var(Var::zeta3);
  ClosedForm out;
  out.plus.push_back(fr(P, Field::q(-2), {{z2, 1}, {Field::q(-2) * z1, -1}}));
  out.plus.push_back(fr(P, Field::q(-2), {{Field::q(1) * z3, 1}, {Field::q(-1) * z2, -1}}));
  return out;
}

ClosedForm shifted_evaluation_highest(const LambdaSpec& s, const std::vector<QExponent>& xi) {
  if (xi.size() != 2) throw UsageError("the sl3 shift has two components");
  const Field z = Field::var(Var::zeta);
  ClosedForm out;
  out.plus.push_back(fr(P, qe(s, 0, 1, -1) * coeff::qpow(xi[0], s), {{qe(s, 0, 0, 2) * z, 1}, {qe(s, 0, 2) * z, -1}}));
  out.plus.push_back(
      fr(P, qe(s, 0, 0, 1, -1) * coeff::qpow(xi[1], s), {{qe(s, -1, 0, 0, 2) * z, 1}, {qe(s, -1, 0, 2) * z, -1}}));
  return out;
}

Field substitute_spectral(const Field& f) {
  auto mono = [](Var zi, int c, int lam_index) {
    Monomial m = Monomial::of(Var::zeta, 1) * Monomial::of(Var::q, c);
    if (lam_index > 0) m = m * Monomial::of(static_cast<Var>(lam_index), 2);
    return std::pair{zi, m};
  };
  Field out = f;
  for (const auto& [v, m] : {mono(Var::zeta1, 2, 1), mono(Var::zeta2, 0, 2), mono(Var::zeta3, -2, 3)})
    out = out.substitute(v, m);
  return out;
}

FactoredRational substitute_spectral(const FactoredRational& f) {
  FactoredRational out = f;
  out.constant = substitute_spectral(f.constant);
  for (auto& x : out.factors) x.a = substitute_spectral(x.a);
  return out.normalized();
}

const std::vector<TypoEntry>& typo_ledger() { return kTypos; }

}  // namespace qloop::lweights
