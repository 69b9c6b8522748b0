#include "coeff/gcd.hpp"

#include <bit>

namespace qloop::coeff {

namespace {

constexpr int kHeuristicTries = 12;

IntPoly one() { return IntPoly(mpz_class(1)); }

void make_sign_positive(IntPoly& p) {
  if (!p.is_zero() && p.leading().coef < 0) p = -p;
}

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (abs(t.coef) > m) m = abs(t.coef);
  return m;
}

IntPoly evaluate(const IntPoly& p, std::size_t var, const mpz_class& xi) {
  std::vector<IntPoly::Term> out;
  out.reserve(p.size());
  std::vector<mpz_class> powers{mpz_class(1)};
  for (const auto& t : p.terms()) {
    const int k = t.mono.e[var];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * xi);
    Monomial m = t.mono;
    m.e[var] = 0;
    out.push_back({m, t.coef * powers[static_cast<std::size_t>(k)]});
  }
  return IntPoly::from_terms(std::move(out));
}

IntPoly interpolate(IntPoly h, std::size_t var, const mpz_class& xi, int max_degree) {
  std::vector<IntPoly::Term> out;
  const mpz_class half = xi / 2;
  int i = 0;
  while (!h.is_zero()) {
    if (i > max_degree) return {};
    std::vector<IntPoly::Term> rest;
    rest.reserve(h.size());
    for (const auto& t : h.terms()) {
      mpz_class g;
      mpz_fdiv_r(g.get_mpz_t(), t.coef.get_mpz_t(), xi.get_mpz_t());
      if (g > half) g -= xi;
      if (g != 0) {
        Monomial m = t.mono;
        m.e[var] = i;
        out.push_back({m, g});
      }
      mpz_class r = t.coef - g;
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), xi.get_mpz_t());
      if (r != 0) rest.push_back({t.mono, std::move(r)});
    }
    h = IntPoly::from_terms(std::move(rest));
    ++i;
  }
  return IntPoly::from_terms(std::move(out));
}

IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g);

// Full gcd for polynomials with content and monomial factors stripped off.
IntPoly gcd_general(const IntPoly& f0, const IntPoly& g0) {
  if (f0.is_zero()) {
    IntPoly r = strip_monomial(g0);
    make_sign_positive(r);
    return r;
  }
  if (g0.is_zero()) return gcd_general(g0, f0);
  IntPoly f = strip_monomial(f0), g = strip_monomial(g0);
  const mpz_class cf = content(f), cg = content(g);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  f = exact_div_ground(f, cf);
  g = exact_div_ground(g, cg);
  make_sign_positive(f);
  make_sign_positive(g);
  IntPoly h = gcd_primitive(f, g);
  return c == 1 ? h : h.scaled(c);
}

IntPoly heuristic_gcd(const IntPoly& f, const IntPoly& g, unsigned mask) {
  const std::size_t var = static_cast<std::size_t>(31 - std::countl_zero(mask));
  const mpz_class fn = max_norm(f), gn = max_norm(g);
  const mpz_class b = 2 * (fn < gn ? fn : gn) + 29;
  mpz_class sb;
  mpz_sqrt(sb.get_mpz_t(), b.get_mpz_t());
  mpz_class lo = b < 99 * sb ? b : mpz_class(99 * sb);
  const mpz_class rf = fn / abs(f.leading().coef), rg = gn / abs(g.leading().coef);
  mpz_class alt = 2 * (rf < rg ? rf : rg) + 4;
  mpz_class xi = lo > alt ? lo : alt;
  const int max_deg = std::min(f.max_degree(var), g.max_degree(var));

  for (int attempt = 0; attempt < kHeuristicTries; ++attempt) {
    IntPoly ff = evaluate(f, var, xi), gg = evaluate(g, var, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      IntPoly he = gcd_general(ff, gg);
      IntPoly h = interpolate(he, var, xi, max_deg);
      if (!h.is_zero()) {
        h = exact_div_ground(h, content(h));
        make_sign_positive(h);
        IntPoly q;
        if (try_divide(f, h, q) && try_divide(g, h, q)) return h;
      }
    }
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    xi = 73794 * xi * r / 27011;
  }
  throw InternalError("heuristic gcd did not converge");
}

// f, g primitive, positive leading coefficient, no monomial factor.
IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g) {
  if (f.is_constant() || g.is_constant()) return one();
  if (f == g) return f;
  const unsigned mf = f.var_mask(), mg = g.var_mask();
  if ((mf & mg) == 0) return one();
  if (mf != mg) {
    const unsigned diff = mf ^ mg;
    const std::size_t var = static_cast<std::size_t>(std::countr_zero(diff));
    const bool in_f = (mf >> var) & 1u;
    const IntPoly& a = in_f ? f : g;
    IntPoly h = in_f ? g : f;
    for (const auto& [k, part] : a.split(var)) {
      h = gcd_general(h, part);
      if (h.is_constant()) return one();
    }
    return h;
  }
  IntPoly q;
  if (f.size() <= g.size() ? try_divide(g, f, q) : false) return f;
  if (g.size() <= f.size() ? try_divide(f, g, q) : false) return g;
  return heuristic_gcd(f, g, mf);
}

}  // namespace

IntPoly strip_monomial(const IntPoly& p) {
  const Monomial m = p.min_monomial();
  return m.is_one() ? p : p.mul_monomial(m.inverse());
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  return gcd_general(f, g);
}

}  // namespace qloop::coeff
