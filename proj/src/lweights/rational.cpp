#include "lweights/rational.hpp"

#include <algorithm>

#include "coeff/linalg.hpp"

namespace qloop::lweights {

namespace {

using Poly = std::vector<Field>;

Poly trim(Poly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  if (p.empty()) p.push_back(Field(0));
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Field(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string variable(Direction d) { return d == Direction::Plus ? "u" : "u^-1"; }

bool needs_parens(const Field& f) {
  return !f.is_polynomial() || f.num().size() > 1;
}

// "c*u" with c rendered; empty coefficient means 1.
std::string times_var(const Field& c, Direction d) {
  if (c.is_one()) return variable(d);
  const std::string s = coeff::render(c);
  return (needs_parens(c) ? "(" + s + ")" : s) + "*" + variable(d);
}

bool negative_monomial(const Field& f) { return f.is_monomial() && f.num().leading().coef < 0; }

}  // namespace

RationalForm RationalForm::trimmed() const { return {dir, trim(num), trim(den)}; }

FieldSeries RationalForm::expand(int order) const {
  if (den.empty() || !den[0].is_one()) throw InternalError("rational form without normalized denominator");
  std::vector<Field> n(static_cast<std::size_t>(order) + 1, Field(0)), d = n;
  for (std::size_t k = 0; k < num.size() && k < n.size(); ++k) n[k] = num[k];
  for (std::size_t k = 0; k < den.size() && k < d.size(); ++k) d[k] = den[k];
  return FieldSeries(dir, n) * FieldSeries(dir, d).inverse();
}

bool RationalForm::same_function(const RationalForm& o) const {
  if (dir != o.dir) return false;
  return trim(mul(num, o.den)) == trim(mul(o.num, den));
}

std::string RationalForm::render() const {
  const RationalForm t = trimmed();
  auto poly = [&](const Poly& p) {
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += coeff::render(p[k]);
      } else {
        const std::string var = dir == Direction::Plus ? "u^" + std::to_string(k) : "u^-" + std::to_string(k);
        const std::string v = k == 1 ? variable(dir) : var;
        out += p[k].is_one() ? v : "(" + coeff::render(p[k]) + ")*" + v;
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  if (t.den.size() == 1) return poly(t.num);
  return "(" + poly(t.num) + ")/(" + poly(t.den) + ")";
}

FactoredRational FactoredRational::normalized() const {
  FactoredRational out{dir, constant, {}};
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const LinearFactor& g) { return g.a == f.a; });
    if (it == out.factors.end())
      out.factors.push_back(f);
    else
      it->power += f.power;
  }
  std::erase_if(out.factors, [](const LinearFactor& f) { return f.power == 0; });
  std::vector<std::pair<std::string, LinearFactor>> keyed;
  keyed.reserve(out.factors.size());
  for (const auto& f : out.factors) keyed.emplace_back(coeff::render(f.a), f);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    const bool nx = x.second.power > 0, ny = y.second.power > 0;
    if (nx != ny) return nx;
    return x.first < y.first;
  });
  out.factors.clear();
  for (auto& [k, f] : keyed) out.factors.push_back(f);
  return out;
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  if (dir != o.dir) throw UsageError("cannot multiply rational functions of u and of u^-1");
  FactoredRational out{dir, constant * o.constant, factors};
  out.factors.insert(out.factors.end(), o.factors.begin(), o.factors.end());
  return out.normalized();
}

FactoredRational FactoredRational::scaled_argument(const Field& s) const {
  FactoredRational out = *this;
  for (auto& f : out.factors) f.a *= s;
  return out;
}

RationalForm FactoredRational::to_form() const {
  Poly num{constant}, den{Field(1)};
  for (const auto& f : factors) {
    const Poly lin{Field(1), -f.a};
    for (int k = 0; k < std::abs(f.power); ++k) {
      if (f.power > 0)
        num = mul(num, lin);
      else
        den = mul(den, lin);
    }
  }
  return {dir, trim(num), trim(den)};
}

FieldSeries FactoredRational::expand(int order) const { return to_form().expand(order); }

int FactoredRational::num_degree() const {
  int d = 0;
  for (const auto& f : factors)
    if (f.power > 0) d += f.power;
  return d;
}

int FactoredRational::den_degree() const {
  int d = 0;
  for (const auto& f : factors)
    if (f.power < 0) d -= f.power;
  return d;
}

std::string FactoredRational::render() const {
  const FactoredRational n = normalized();
  std::string out;
  if (!n.constant.is_one() || n.factors.empty()) {
    const std::string c = coeff::render(n.constant);
    out = needs_parens(n.constant) ? "(" + c + ")" : c;
  }
  for (const auto& f : n.factors) {
    if (!out.empty()) out += "*";
    std::string lin;
    if (negative_monomial(f.a))
      lin = "1 + " + times_var(-f.a, n.dir);
    else
      lin = "1 - " + times_var(f.a, n.dir);
    out += "(" + lin + ")";
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

std::optional<FactoredRational> factor_monomial_roots(const RationalForm& r) {
  Poly p = trim(r.num);
  if (p[0].is_zero()) return std::nullopt;
  FactoredRational out{r.dir, p[0], {}};
  const Field c0inv = p[0].inverse();
  for (auto& c : p) c *= c0inv;
  while (p.size() > 1) {
    // sum of the roots a_k of prod (1 - a_k x)
    const Field s = -p[1];
    if (!s.is_polynomial() || s.is_zero()) return std::nullopt;
    bool divided = false;
    for (const auto& t : s.num().terms()) {
      if (t.coef.get_den() != 1) return std::nullopt;
      const Field a = Field::monomial(t.mono, t.coef > 0 ? 1 : -1);
      // synthetic division by (1 - a x)
      Poly q(p.size() - 1, Field(0));
      Field prev(0);
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        q[k] = p[k] + a * prev;
        prev = q[k];
      }
      if (!(p.back() + a * prev).is_zero()) continue;
      out.factors.push_back({a, 1});
      p = std::move(q);
      divided = true;
      break;
    }
    if (!divided) return std::nullopt;
  }
  return out.normalized();
}

std::optional<FactoredRational> factorize(const RationalForm& r) {
  const RationalForm t = r.trimmed();
  auto num = factor_monomial_roots(t);
  if (!num) return std::nullopt;
  auto den = factor_monomial_roots(RationalForm{t.dir, t.den, {Field(1)}});
  if (!den) return std::nullopt;
  FactoredRational out = *num;
  out.constant /= den->constant;
  for (auto f : den->factors) {
    f.power = -f.power;
    out.factors.push_back(f);
  }
  return out.normalized();
}

namespace {

// Leading term of num/den in the polynomial term order.
std::pair<coeff::Monomial, mpq_class> leading_term(const Field& f) {
  const auto& n = f.num().leading();
  const auto& d = f.den().leading();
  return {n.mono / d.mono, n.coef / d.coef};
}

// Fast path for series whose poles are +-(Laurent monomials): reads the
// dominant pole off the leading terms of the last coefficients of s*Q, then
// multiplies it away, until s*Q is a polynomial through order s.order().
// The result is exact (checked through the full order) and reduced; nullopt
// means the heuristic did not apply, not that no rational form exists.
std::optional<RationalForm> peel_monomial_poles(const FieldSeries& s, int max_num, int max_den) {
  const int order = s.order();
  std::vector<Field> t = s.coefficients();
  Poly q{Field(1)};
  auto tail_zero = [&] {
    for (int k = max_num + 1; k <= order; ++k)
      if (!t[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
  };
  while (!tail_zero()) {
    if (static_cast<int>(q.size()) - 1 >= max_den) return std::nullopt;
    int last = order;
    while (t[static_cast<std::size_t>(last)].is_zero()) --last;
    if (last < 1 || t[static_cast<std::size_t>(last - 1)].is_zero()) return std::nullopt;
    const auto [m1, c1] = leading_term(t[static_cast<std::size_t>(last)]);
    const auto [m0, c0] = leading_term(t[static_cast<std::size_t>(last - 1)]);
    const Field b = Field::monomial(m1 / m0, (c1 / c0) > 0 ? 1 : -1);
    for (int k = order; k >= 1; --k) t[static_cast<std::size_t>(k)] -= b * t[static_cast<std::size_t>(k - 1)];
    q = mul(q, Poly{Field(1), -b});
  }
  Poly p(t.begin(), t.begin() + std::min(max_num, order) + 1);
  p = trim(p);
  // Cancel common factors (1 - b x) of p and q.
  bool changed = true;
  while (changed && q.size() > 1) {
    changed = false;
    auto qf = factor_monomial_roots(RationalForm{s.direction(), q, {Field(1)}});
    if (!qf) return std::nullopt;
    for (const auto& f : qf->factors) {
      const auto divide = [&](const Poly& x, Poly& out) {
        if (x.size() < 2) return false;
        out.assign(x.size() - 1, Field(0));
        Field prev(0);
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
          out[k] = x[k] + f.a * prev;
          prev = out[k];
        }
        return (x.back() + f.a * prev).is_zero();
      };
      Poly pq, qq;
      if (divide(p, pq) && divide(q, qq)) {
        p = trim(pq);
        q = trim(qq);
        changed = true;
        break;
      }
    }
  }
  if (static_cast<int>(p.size()) - 1 > max_num || static_cast<int>(q.size()) - 1 > max_den) return std::nullopt;
  return RationalForm{s.direction(), p, q};
}

}  // namespace

std::optional<RationalForm> rational_reconstruct(const FieldSeries& s, int max_num, int max_den) {
  if (max_num < 0 || max_den < 0) throw UsageError("degree bounds must be non-negative");
  const int order = s.order();
  if (order < max_num + max_den + 1)
    throw UsageError("rational reconstruction with degrees " + std::to_string(max_num) + "/" +
                     std::to_string(max_den) + " needs series order >= " + std::to_string(max_num + max_den + 1) +
                     ", got " + std::to_string(order));
  if (auto fast = peel_monomial_poles(s, max_num, max_den)) return fast;
  auto coef = [&](int k) { return k < 0 ? Field(0) : s[k]; };
  for (int total = 0; total <= max_num + max_den; ++total) {
    for (int r = 0; r <= std::min(total, max_den); ++r) {
      const int p = total - r;
      if (p > max_num) continue;
      // sum_{j=1}^{r} d_j s_{k-j} = -s_k for k = p+1..order
      coeff::Matrix a;
      std::vector<Field> b;
      for (int k = p + 1; k <= order; ++k) {
        std::vector<Field> row(static_cast<std::size_t>(r));
        for (int j = 1; j <= r; ++j) row[static_cast<std::size_t>(j - 1)] = coef(k - j);
        a.push_back(std::move(row));
        b.push_back(-coef(k));
      }
      std::optional<std::vector<Field>> d;
      if (r == 0) {
        bool ok = true;
        for (const auto& x : b) ok = ok && x.is_zero();
        if (ok) d = std::vector<Field>{};
      } else {
        d = coeff::solve(a, b);
      }
      if (!d) continue;
      RationalForm out;
      out.dir = s.direction();
      out.den.assign(1, Field(1));
      out.den.insert(out.den.end(), d->begin(), d->end());
      out.num.assign(static_cast<std::size_t>(p) + 1, Field(0));
      for (int k = 0; k <= p; ++k) {
        Field acc = coef(k);
        for (int j = 1; j <= r; ++j) acc += out.den[static_cast<std::size_t>(j)] * coef(k - j);
        out.num[static_cast<std::size_t>(k)] = acc;
      }
      return out.trimmed();
    }
  }
  return std::nullopt;
}

}  // namespace qloop::lweights
