#include "coeff/poly.hpp"

#include <string_view>

namespace qloop::coeff {

namespace {
constexpr std::string_view kNames[kNumVars] = {"q", "z1", "z2", "z3", "zeta", "zeta1", "zeta2", "zeta3", "u"};

bool divide_coef(const mpz_class& a, const mpz_class& b, mpz_class& out) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return true;
}
bool divide_coef(const mpq_class& a, const mpq_class& b, mpq_class& out) {
  out = a / b;
  return true;
}
}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }
std::string_view var_name(std::size_t i) { return kNames[i]; }

template <class C>
bool try_divide(const SparsePoly<C>& f, const SparsePoly<C>& g, SparsePoly<C>& quotient) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  quotient = SparsePoly<C>{};
  if (f.is_zero()) return true;
  if (g.size() == 1) {
    std::vector<typename SparsePoly<C>::Term> out;
    out.reserve(f.size());
    const auto& lt = g.leading();
    for (const auto& t : f.terms()) {
      C c;
      if (!divide_coef(t.coef, lt.coef, c)) return false;
      out.push_back({t.mono / lt.mono, std::move(c)});
    }
    quotient = SparsePoly<C>::from_terms(std::move(out));
    return true;
  }
  // Every quotient term lies in the box [mindeg f - mindeg g, maxdeg f - maxdeg g]
  // (per variable); leaving it means g does not divide f.
  Monomial lo, hi;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    int fmin = f.terms()[0].mono.e[v], fmax = fmin, gmin = g.terms()[0].mono.e[v], gmax = gmin;
    for (const auto& t : f.terms()) {
      fmin = std::min(fmin, t.mono.e[v]);
      fmax = std::max(fmax, t.mono.e[v]);
    }
    for (const auto& t : g.terms()) {
      gmin = std::min(gmin, t.mono.e[v]);
      gmax = std::max(gmax, t.mono.e[v]);
    }
    lo.e[v] = fmin - gmin;
    hi.e[v] = fmax - gmax;
    if (lo.e[v] > hi.e[v]) return false;
  }
  const auto& lg = g.leading();
  std::vector<typename SparsePoly<C>::Term> qterms;
  SparsePoly<C> r = f;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    Monomial m = lr.mono / lg.mono;
    if (!m.divisible_by(lo) || !hi.divisible_by(m)) return false;
    C c;
    if (!divide_coef(lr.coef, lg.coef, c)) return false;
    r -= g.mul_term(m, c);
    qterms.push_back({m, std::move(c)});
  }
  quotient = SparsePoly<C>::from_terms(std::move(qterms));
  return true;
}

template bool try_divide<mpz_class>(const IntPoly&, const IntPoly&, IntPoly&);
template bool try_divide<mpq_class>(const LaurentPoly&, const LaurentPoly&, LaurentPoly&);

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly exact_div_ground(const IntPoly& p, const mpz_class& c) {
  if (c == 1) return p;
  IntPoly r = p;
  for (auto& t : r.mutable_terms()) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::pair<mpq_class, IntPoly> primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return {mpq_class(0), IntPoly{}};
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  if (p.leading().coef < 0) num_gcd = -num_gcd;
  IntPoly out;
  auto& ts = out.mutable_terms();
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class v = t.coef.get_num() * (den_lcm / t.coef.get_den());
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), num_gcd.get_mpz_t());
    ts.push_back({t.mono, std::move(v)});
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  return {c, std::move(out)};
}

LaurentPoly to_rational(const IntPoly& p) {
  LaurentPoly out;
  auto& ts = out.mutable_terms();
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.mono, mpq_class(t.coef)});
  return out;
}

}  // namespace qloop::coeff
