#pragma once

#include <array>
#include <string>

#include "coeff/field.hpp"

namespace qloop::coeff {

/// Integer-linear exponent c + sum_i lam[i] * lambda_{i+1}.
struct QExponent {
  int c = 0;
  std::array<int, 3> lam{};

  QExponent operator+(const QExponent& o) const {
    return {c + o.c, {lam[0] + o.lam[0], lam[1] + o.lam[1], lam[2] + o.lam[2]}};
  }
  QExponent operator-() const { return {-c, {-lam[0], -lam[1], -lam[2]}}; }
  QExponent operator-(const QExponent& o) const { return *this + (-o); }
  QExponent operator*(int k) const { return {c * k, {lam[0] * k, lam[1] * k, lam[2] * k}}; }
  friend bool operator==(const QExponent&, const QExponent&) = default;
};

/// How lambda enters the coefficient field: either through the markers
/// z_i = q^{lambda_i} or through integer values.
struct LambdaSpec {
  bool symbolic = true;
  std::array<int, 3> values{};

  static LambdaSpec symbolic_markers() { return {}; }
  static LambdaSpec integers(std::array<int, 3> v) { return {false, v}; }
  std::string describe() const;
};

/// q^e as a field element.
Field qpow(const QExponent& e, const LambdaSpec& spec);
Field qpow(int k);

/// kappa = q - q^{-1}.
Field kappa();

/// [v]_q = (q^v - q^{-v}) / (q - q^{-1}).
Field qnum(int v);
Field qnum(const QExponent& e, const LambdaSpec& spec);

/// [n]_q! (n >= 0).
Field qfactorial(int n);

/// q-binomial [n choose k]_q; zero when k < 0 or k > n (n >= 0).
Field qbinomial(int n, int k);

}  // namespace qloop::coeff
