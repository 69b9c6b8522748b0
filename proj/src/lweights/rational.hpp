#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coeff/field.hpp"
#include "series/series.hpp"

namespace qloop::lweights {

using coeff::Field;
using series::Direction;
using FieldSeries = series::Series<Field>;

/// (1 - a x)^power, x = u (Plus) or u^{-1} (Minus).
struct LinearFactor {
  Field a;
  int power = 1;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// P(x) / Q(x) as coefficient lists in x, Q(0) = 1.
struct RationalForm {
  Direction dir = Direction::Plus;
  std::vector<Field> num{Field(0)};
  std::vector<Field> den{Field(1)};

  /// Trailing zero coefficients removed.
  RationalForm trimmed() const;
  int num_degree() const { return static_cast<int>(trimmed().num.size()) - 1; }
  int den_degree() const { return static_cast<int>(trimmed().den.size()) - 1; }
  FieldSeries expand(int order) const;
  /// P1 Q2 == P2 Q1.
  bool same_function(const RationalForm& o) const;
  std::string render() const;
};

/// constant * prod (1 - a_k x)^{p_k}: the factored form the closed formulas
/// are written in.
struct FactoredRational {
  Direction dir = Direction::Plus;
  Field constant{1};
  std::vector<LinearFactor> factors;

  static FactoredRational constant_only(Direction d, const Field& c) { return {d, c, {}}; }

  /// Merges factors with equal a, drops zero powers, sorts deterministically
  /// (numerator factors first, each group by rendered a).
  FactoredRational normalized() const;
  FactoredRational operator*(const FactoredRational& o) const;
  /// x -> s x.
  FactoredRational scaled_argument(const Field& s) const;
  RationalForm to_form() const;
  FieldSeries expand(int order) const;
  bool same_function(const FactoredRational& o) const { return to_form().same_function(o.to_form()); }
  bool same_function(const RationalForm& o) const { return to_form().same_function(o); }
  int num_degree() const;
  int den_degree() const;
  /// e.g. "q^-2*(1 - z2^2*u)*(1 - q^-2*z1^2*u)^-1".
  std::string render() const;
};

/// Polynomial in x (coefficient list) as a product of monomial-root factors
/// times its constant term; nullopt when the roots are not all of the form
/// +-(Laurent monomial). Requires a nonzero constant term.
std::optional<FactoredRational> factor_monomial_roots(const RationalForm& r);

/// Numerator and denominator of a reduced form factored with
/// factor_monomial_roots; nullopt if either fails.
std::optional<FactoredRational> factorize(const RationalForm& r);

/// The P/Q of least degrees (deg P <= max_num, deg Q <= max_den, Q(0) = 1)
/// whose expansion agrees with s through order s.order(). nullopt if none.
/// Throws UsageError if s.order() < max_num + max_den + 1, so that at least
/// one coefficient beyond the unknowns is checked.
std::optional<RationalForm> rational_reconstruct(const FieldSeries& s, int max_num, int max_den);

}  // namespace qloop::lweights
