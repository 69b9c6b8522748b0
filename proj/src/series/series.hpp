#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coeff/field.hpp"
#include "errors.hpp"

namespace qloop::series {

using coeff::Field;

/// Expansion variable: u (around 0) or u^{-1} (around infinity).
enum class Direction { Plus, Minus };

/// Algebra hooks a coefficient type must provide. Specialized for Field here
/// and for operators in linop.
template <class A>
struct Traits;

template <>
struct Traits<Field> {
  static Field zero_like(const Field&) { return Field(); }
  static Field one_like(const Field&) { return Field(1); }
  static Field invert_constant(const Field& a) { return a.inverse(); }
  static Field scale(const Field& a, const Field& c) { return a * c; }
  static bool is_zero(const Field& a) { return a.is_zero(); }
};

/// Power series in u or u^{-1} truncated after the coefficient of order N.
template <class A>
class Series {
 public:
  Series() = default;
  Series(Direction dir, std::vector<A> coefficients) : dir_(dir), c_(std::move(coefficients)) {
    if (c_.empty()) throw UsageError("a series needs at least its constant coefficient");
  }

  /// c0 + c1 u (affine series, padded with zeros up to order n).
  static Series affine(Direction dir, const A& c0, const A& c1, int n) {
    std::vector<A> c(static_cast<std::size_t>(n) + 1, Traits<A>::zero_like(c0));
    c[0] = c0;
    if (n >= 1) c[1] = c1;
    return Series(dir, std::move(c));
  }
  static Series constant(Direction dir, const A& c0, int n) {
    std::vector<A> c(static_cast<std::size_t>(n) + 1, Traits<A>::zero_like(c0));
    c[0] = c0;
    return Series(dir, std::move(c));
  }

  Direction direction() const { return dir_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<A>& coefficients() const { return c_; }

  const A& operator[](int k) const { return at(k); }
  const A& at(int k) const {
    if (k < 0 || k > order())
      throw UsageError("series coefficient " + std::to_string(k) + " beyond truncation order " +
                       std::to_string(order()));
    return c_[static_cast<std::size_t>(k)];
  }

  Series truncated(int n) const {
    if (n > order()) throw UsageError("cannot extend a truncated series");
    return Series(dir_, std::vector<A>(c_.begin(), c_.begin() + n + 1));
  }

  Series operator+(const Series& o) const { return combine(o, false); }
  Series operator-(const Series& o) const { return combine(o, true); }

  /// Cauchy product, truncated at the smaller order.
  Series operator*(const Series& o) const {
    check_direction(o);
    const int n = std::min(order(), o.order());
    std::vector<A> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      A acc = Traits<A>::zero_like(c_[0]);
      bool first = true;
      for (int j = 0; j <= k; ++j) {
        const A& a = c_[static_cast<std::size_t>(j)];
        const A& b = o.c_[static_cast<std::size_t>(k - j)];
        if (Traits<A>::is_zero(a) || Traits<A>::is_zero(b)) continue;
        if (first) {
          acc = a * b;
          first = false;
        } else {
          acc = acc + a * b;
        }
      }
      out.push_back(std::move(acc));
    }
    return Series(dir_, std::move(out));
  }

  /// Multiplies every coefficient by a scalar.
  Series scaled(const Field& s) const {
    std::vector<A> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(Traits<A>::scale(a, s));
    return Series(dir_, std::move(out));
  }

  /// Left/right multiplication of every coefficient by a fixed element.
  Series left_mul(const A& x) const {
    std::vector<A> out;
    for (const auto& a : c_) out.push_back(x * a);
    return Series(dir_, std::move(out));
  }
  Series right_mul(const A& x) const {
    std::vector<A> out;
    for (const auto& a : c_) out.push_back(a * x);
    return Series(dir_, std::move(out));
  }

  /// Series in the rescaled variable: u -> s u, i.e. coefficient k times s^k.
  Series rescaled(const Field& s) const {
    std::vector<A> out;
    out.reserve(c_.size());
    Field p(1);
    for (const auto& a : c_) {
      out.push_back(p.is_one() ? a : Traits<A>::scale(a, p));
      p *= s;
    }
    return Series(dir_, std::move(out));
  }

  /// Multiplies by the expansion variable (shifts coefficients up, dropping the
  /// last one).
  Series shifted() const {
    std::vector<A> out;
    out.reserve(c_.size());
    out.push_back(Traits<A>::zero_like(c_[0]));
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) out.push_back(c_[k]);
    return Series(dir_, std::move(out));
  }

  /// Multiplicative inverse; the constant coefficient must be invertible.
  Series inverse() const {
    const A inv0 = Traits<A>::invert_constant(c_[0]);
    std::vector<A> b;
    b.reserve(c_.size());
    b.push_back(inv0);
    for (int k = 1; k <= order(); ++k) {
      A acc = Traits<A>::zero_like(c_[0]);
      bool any = false;
      for (int j = 1; j <= k; ++j) {
        const A& a = c_[static_cast<std::size_t>(j)];
        if (Traits<A>::is_zero(a)) continue;
        const A term = a * b[static_cast<std::size_t>(k - j)];
        acc = any ? acc + term : term;
        any = true;
      }
      b.push_back(any ? Traits<A>::scale(inv0 * acc, Field(-1)) : Traits<A>::zero_like(c_[0]));
    }
    return Series(dir_, std::move(b));
  }

 private:
  void check_direction(const Series& o) const {
    if (o.dir_ != dir_) throw UsageError("series in u and in u^-1 cannot be combined");
  }
  Series combine(const Series& o, bool subtract) const {
    check_direction(o);
    const int n = std::min(order(), o.order());
    std::vector<A> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      const A& a = c_[static_cast<std::size_t>(k)];
      const A& b = o.c_[static_cast<std::size_t>(k)];
      out.push_back(subtract ? a - b : a + b);
    }
    return Series(dir_, std::move(out));
  }

  Direction dir_ = Direction::Plus;
  std::vector<A> c_;
};

/// log(1 - x) = -sum_{n>=1} x^n / n; x must have zero constant coefficient.
template <class A>
Series<A> log_one_minus(const Series<A>& x) {
  if (!Traits<A>::is_zero(x[0])) throw DomainError("log(1 - x) needs x without constant term");
  const int n = x.order();
  Series<A> power = x;
  Series<A> acc = x.scaled(Field(-1));
  for (int k = 2; k <= n; ++k) {
    power = power * x;
    acc = acc + power.scaled(Field(mpq_class(-1, k)));
  }
  return acc;
}

/// exp(y) = sum y^n / n!; y must have zero constant coefficient.
template <class A>
Series<A> exp_series(const Series<A>& y) {
  if (!Traits<A>::is_zero(y[0])) throw DomainError("exp(y) needs y without constant term");
  const int n = y.order();
  std::vector<A> one(static_cast<std::size_t>(n) + 1, Traits<A>::zero_like(y[0]));
  one[0] = Traits<A>::one_like(y[0]);
  Series<A> acc(y.direction(), one);
  Series<A> power = y;
  mpz_class fact = 1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) power = power * y;
    fact *= k;
    acc = acc + power.scaled(Field(mpq_class(mpz_class(1), fact)));
  }
  return acc;
}

/// Text form "c0 + (c1)*u + (c2)*u^2 ..." (u^-1 powers for Minus).
inline std::string render(const Series<Field>& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coeff::render(s[k]);
    if (k == 0) {
      out += c;
      continue;
    }
    const int e = s.direction() == Direction::Plus ? k : -k;
    out += "(" + c + ")*u" + (e == 1 ? std::string() : "^" + std::to_string(e));
  }
  if (out.empty()) out = "0";
  return out + " + O(u^" + std::to_string(s.direction() == Direction::Plus ? s.order() + 1 : -(s.order() + 1)) + ")";
}

}  // namespace qloop::series
