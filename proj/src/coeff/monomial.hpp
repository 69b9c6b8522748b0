#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace qloop::coeff {

/// Variables of the coefficient field, in lex priority order.
/// z_i stands for q^{lambda_i}; zeta markers carry spectral parameters;
/// u is the formal series variable (only used when parsing rendered l-weights).
enum class Var : std::uint8_t { q = 0, z1, z2, z3, zeta, zeta1, zeta2, zeta3, u };

inline constexpr std::size_t kNumVars = 9;

std::string_view var_name(Var v);
std::string_view var_name(std::size_t i);

/// Exponent vector of a Laurent monomial. Ordered lexicographically with the
/// q exponent most significant.
struct Monomial {
  std::array<std::int32_t, kNumVars> e{};

  static Monomial of(Var v, std::int32_t k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = k;
    return m;
  }

  std::int32_t operator[](std::size_t i) const { return e[i]; }
  std::int32_t& operator[](std::size_t i) { return e[i]; }
  std::int32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }

  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  Monomial pow(std::int32_t k) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = e[i] * k;
    return r;
  }
  Monomial inverse() const { return pow(-1); }

  /// True when every exponent of *this is >= the matching exponent of o.
  bool divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e <=> b.e; }
};

inline Monomial min_exponents(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
  return r;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace qloop::coeff
