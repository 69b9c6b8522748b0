#include "coeff/qnumbers.hpp"

namespace qloop::coeff {

std::string LambdaSpec::describe() const {
  if (symbolic) return "symbolic";
  return "(" + std::to_string(values[0]) + "," + std::to_string(values[1]) + "," + std::to_string(values[2]) + ")";
}

Field qpow(int k) { return Field::q(k); }

Field qpow(const QExponent& e, const LambdaSpec& spec) {
  if (spec.symbolic) {
    Monomial m;
    m[static_cast<std::size_t>(Var::q)] = e.c;
    m[static_cast<std::size_t>(Var::z1)] = e.lam[0];
    m[static_cast<std::size_t>(Var::z2)] = e.lam[1];
    m[static_cast<std::size_t>(Var::z3)] = e.lam[2];
    return Field::monomial(m);
  }
  int k = e.c;
  for (std::size_t i = 0; i < 3; ++i) k += e.lam[i] * spec.values[i];
  return Field::q(k);
}

Field kappa() {
  static const Field k = Field::q(1) - Field::q(-1);
  return k;
}

Field qnum(int v) {
  if (v == 0) return Field();
  return (Field::q(v) - Field::q(-v)) / kappa();
}

Field qnum(const QExponent& e, const LambdaSpec& spec) {
  return (qpow(e, spec) - qpow(-e, spec)) / kappa();
}

Field qfactorial(int n) {
  if (n < 0) throw DomainError("q-factorial of a negative integer");
  Field r(1);
  for (int i = 2; i <= n; ++i) r *= qnum(i);
  return r;
}

Field qbinomial(int n, int k) {
  if (n < 0) throw DomainError("q-binomial with negative top argument");
  if (k < 0 || k > n) return Field();
  return qfactorial(n) / (qfactorial(k) * qfactorial(n - k));
}

}  // namespace qloop::coeff
