#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "coeff/poly.hpp"

namespace qloop::coeff {

/// Element of Q(q, z1, z2, z3, zeta, zeta1, zeta2, zeta3, u), kept in canonical
/// form: numerator and denominator coprime, the denominator a polynomial with
/// no monomial factor whose leading coefficient (lex, q first) is 1. Two
/// elements are equal exactly when their representations are equal.
class Field {
 public:
  Field() : den_(mpq_class(1)) {}
  Field(long v) : num_(mpq_class(v)), den_(mpq_class(1)) {}  // NOLINT(google-explicit-constructor)
  explicit Field(const mpq_class& v) : num_(v), den_(mpq_class(1)) {}
  explicit Field(const LaurentPoly& p) : num_(p), den_(mpq_class(1)) {}
  Field(const LaurentPoly& num, const LaurentPoly& den);

  static Field monomial(const Monomial& m, const mpq_class& c = 1) { return Field(LaurentPoly(m, c)); }
  static Field var(Var v, int k = 1) { return monomial(Monomial::of(v, k)); }
  static Field q(int k = 1) { return var(Var::q, k); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// c * monomial with c rational.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }

  Field operator-() const;
  Field operator+(const Field& o) const;
  Field operator-(const Field& o) const;
  Field operator*(const Field& o) const;
  Field operator/(const Field& o) const;
  Field& operator+=(const Field& o) { return *this = *this + o; }
  Field& operator-=(const Field& o) { return *this = *this - o; }
  Field& operator*=(const Field& o) { return *this = *this * o; }
  Field& operator/=(const Field& o) { return *this = *this / o; }

  Field inverse() const;
  Field pow(int k) const;

  /// Ring substitution var^k -> repl^k applied to numerator and denominator.
  Field substitute(Var var, const Monomial& repl) const;

  friend bool operator==(const Field& a, const Field& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  struct Canonical {};
  Field(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Renders with the documented grammar, e.g. "(q^2*z1 - z2)/(q^2 - 1)".
std::string render(const LaurentPoly& p);
std::string render(const Field& f);

/// Parses the grammar produced by render (and general +,-,*,/,^ expressions
/// over the field variables and integers). Throws UsageError on bad input.
Field parse_field(std::string_view text);

}  // namespace qloop::coeff
