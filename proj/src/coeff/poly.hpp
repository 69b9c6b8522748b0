#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "coeff/monomial.hpp"
#include "errors.hpp"

namespace qloop::coeff {

/// Sparse multivariate Laurent polynomial. Terms are kept sorted with the
/// largest monomial first and no zero coefficients.
template <class C>
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    C coef;
  };

  SparsePoly() = default;
  explicit SparsePoly(C c) {
    if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
  }
  SparsePoly(const Monomial& m, C c) {
    if (c != 0) terms_.push_back({m, std::move(c)});
  }

  /// Builds from unsorted terms, merging duplicates.
  static SparsePoly from_terms(std::vector<Term> t) {
    SparsePoly p;
    p.terms_ = std::move(t);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }

  const Term& leading() const { return terms_.front(); }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coef;
    return C(0);
  }

  /// Componentwise minimum exponent over all terms (zero polynomial -> 1).
  Monomial min_monomial() const {
    if (terms_.empty()) return Monomial{};
    Monomial m = terms_[0].mono;
    for (const auto& t : terms_) m = min_exponents(m, t.mono);
    return m;
  }

  /// Bitmask of variables that occur with a nonzero exponent.
  unsigned var_mask() const {
    unsigned mask = 0;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (t.mono.e[i] != 0) mask |= 1u << i;
    return mask;
  }

  int max_degree(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.mono.e[var] > d) d = t.mono.e[var];
      first = false;
    }
    return d;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  SparsePoly operator+(const SparsePoly& o) const { return merge(o, false); }
  SparsePoly operator-(const SparsePoly& o) const { return merge(o, true); }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(o, true); }

  SparsePoly operator*(const SparsePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coef);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coef);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) out.push_back({a.mono * b.mono, a.coef * b.coef});
    return from_terms(std::move(out));
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly mul_term(const Monomial& m, const C& c) const {
    if (c == 0) return {};
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;  // monomial multiplication preserves order
  }
  SparsePoly mul_monomial(const Monomial& m) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  SparsePoly scaled(const C& c) const { return mul_term(Monomial{}, c); }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

  /// Replaces every power v^k by repl^k (a ring homomorphism on Laurent
  /// polynomials).
  SparsePoly substitute(std::size_t var, const Monomial& repl) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      const auto k = m.e[var];
      m.e[var] = 0;
      out.push_back({m * repl.pow(k), t.coef});
    }
    return from_terms(std::move(out));
  }

  /// Splits along one variable: returns pairs (exponent, coefficient poly).
  std::vector<std::pair<int, SparsePoly>> split(std::size_t var) const {
    std::vector<std::pair<int, SparsePoly>> parts;
    std::vector<Term> ts = terms_;
    std::stable_sort(ts.begin(), ts.end(), [var](const Term& a, const Term& b) { return a.mono.e[var] > b.mono.e[var]; });
    std::size_t i = 0;
    while (i < ts.size()) {
      const int k = ts[i].mono.e[var];
      SparsePoly part;
      while (i < ts.size() && ts[i].mono.e[var] == k) {
        Term t = ts[i++];
        t.mono.e[var] = 0;
        part.terms_.push_back(std::move(t));
      }
      part.normalize();
      parts.emplace_back(k, std::move(part));
    }
    return parts;
  }

  std::vector<Term>& mutable_terms() { return terms_; }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Term acc = std::move(terms_[r]);
      ++r;
      while (r < terms_.size() && terms_[r].mono == acc.mono) {
        acc.coef += terms_[r].coef;
        ++r;
      }
      if (acc.coef != 0) terms_[w++] = std::move(acc);
    }
    terms_.resize(w);
  }

 private:
  SparsePoly merge(const SparsePoly& o, bool negate) const {
    SparsePoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, negate ? C(-t.coef) : t.coef});
      } else {
        C c = negate ? C(terms_[i].coef - o.terms_[j].coef) : C(terms_[i].coef + o.terms_[j].coef);
        if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using LaurentPoly = SparsePoly<mpq_class>;
using IntPoly = SparsePoly<mpz_class>;

/// Exact division f / g for polynomials (no negative exponents needed; the
/// leading-term algorithm works for Laurent inputs as well). Returns false when
/// g does not divide f.
template <class C>
bool try_divide(const SparsePoly<C>& f, const SparsePoly<C>& g, SparsePoly<C>& quotient);

/// Splits an integral-valued rational poly into (content, primitive IntPoly)
/// with positive leading coefficient on the primitive part.
std::pair<mpq_class, IntPoly> primitive_part(const LaurentPoly& p);
mpz_class content(const IntPoly& p);
LaurentPoly to_rational(const IntPoly& p);
IntPoly exact_div_ground(const IntPoly& p, const mpz_class& c);

}  // namespace qloop::coeff
