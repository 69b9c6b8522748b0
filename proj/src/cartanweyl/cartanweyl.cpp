#include "cartanweyl/cartanweyl.hpp"

#include "coeff/qnumbers.hpp"

namespace qloop::cartanweyl {

using coeff::kappa;
using coeff::qnum;
using series::Direction;

RootLattice::RootLattice(Algebra a) : algebra_(a) {
  if (a == Algebra::Sl2)
    finite_ = {{0, 1}};
  else
    finite_ = {{0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
}

int RootLattice::form(const AffineRoot& a, const AffineRoot& b) const {
  int s = 0;
  for (int i = 0; i <= rank(); ++i)
    for (int j = 0; j <= rank(); ++j) s += a[i] * presentations::cartan(algebra_, i, j) * b[j];
  return s;
}

AffineRoot RootLattice::delta() const { return AffineRoot(static_cast<std::size_t>(rank() + 1), 1); }

AffineRoot RootLattice::simple(int i) const {
  AffineRoot r(static_cast<std::size_t>(rank() + 1), 0);
  r.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

AffineRoot RootLattice::real(const AffineRoot& gamma, int n) const {
  AffineRoot r = gamma;
  for (auto& x : r) x += n;
  return r;
}

AffineRoot RootLattice::dual(const AffineRoot& gamma, int n) const {
  AffineRoot r = gamma;
  for (auto& x : r) x = n + 1 - x;
  return r;
}

int RootLattice::height(const AffineRoot& gamma) const {
  int h = 0;
  for (std::size_t i = 1; i < gamma.size(); ++i) h += gamma[i];
  return h;
}

std::string RootLattice::render(const AffineRoot& r) const {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

Operator qcommutator(const Operator& x, const AffineRoot& a, const Operator& y, const AffineRoot& b,
                     const RootLattice& lattice, Side side) {
  const int f = lattice.form(a, b);
  return linop::commutator(x, y, Field::q(side == Side::E ? -f : f));
}

RootVectorTable::RootVectorTable(GeneratorImages g, RecursionOrder order)
    : g_(std::move(g)), lattice_(g_.algebra), order_(order) {}

const Operator& RootVectorTable::side_image(Side s, int i) const {
  return s == Side::E ? g_.e.at(static_cast<std::size_t>(i)) : g_.f_image(i);
}

// Finite positive roots. For sl3 the only composite root is theta =
// alpha1 + alpha2 with alpha1 before alpha2 in the normal order, so
// e_theta = [e_1, e_2]_q and f_theta = [f_2, f_1]_q.
Operator RootVectorTable::finite_root(Side s, const AffineRoot& gamma) {
  const int h = lattice_.height(gamma);
  if (h == 1) {
    for (int i = 1; i <= lattice_.rank(); ++i)
      if (gamma == lattice_.simple(i)) return side_image(s, i);
  }
  if (g_.algebra == Algebra::Sl3 && gamma == AffineRoot{0, 1, 1}) {
    const AffineRoot a1 = lattice_.simple(1), a2 = lattice_.simple(2);
    if (s == Side::E) return qcommutator(side_image(s, 1), a1, side_image(s, 2), a2, lattice_, s);
    return qcommutator(side_image(s, 2), a2, side_image(s, 1), a1, lattice_, s);
  }
  throw UsageError("not a finite positive root: " + lattice_.render(gamma));
}

// Roots delta - gamma. delta - theta is alpha_0; for sl3, delta - alpha1 =
// alpha2 + (delta - theta) and delta - alpha2 = alpha1 + (delta - theta):
// e_{delta-gamma} = [e_j, e_{delta-theta}]_q, f_{delta-gamma} = [f_{delta-theta}, f_j]_q.
Operator RootVectorTable::dual_finite(Side s, const AffineRoot& gamma) {
  const int h = lattice_.height(gamma);
  if (h == lattice_.rank()) return side_image(s, 0);
  if (g_.algebra == Algebra::Sl3 && h == 1) {
    const int j = gamma == lattice_.simple(1) ? 2 : 1;
    const AffineRoot aj = lattice_.simple(j);
    const AffineRoot top = lattice_.dual(AffineRoot{0, 1, 1}, 0);
    const Operator et = lookup(s, Kind::Dual, AffineRoot{0, 1, 1}, 0);
    if (s == Side::E) return qcommutator(side_image(s, j), aj, et, top, lattice_, s);
    return qcommutator(et, top, side_image(s, j), aj, lattice_, s);
  }
  throw UsageError("not a finite positive root: " + lattice_.render(gamma));
}

Operator RootVectorTable::lookup(Side s, Kind k, const AffineRoot& gamma, int n) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const Key key{s, k, gamma, n};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const Operator op = build(s, k, gamma, n);
  cache_.emplace(key, op);
  return op;
}

Operator RootVectorTable::build(Side s, Kind k, const AffineRoot& gamma, int n) {
  if (n < 0 || (k == Kind::Prime && n < 1)) throw UsageError("root vector depth out of range");
  const AffineRoot d = lattice_.delta();
  const Field inv2 = qnum(lattice_.form(gamma, gamma)).inverse();
  switch (k) {
    case Kind::Real: {
      if (n == 0) return finite_root(s, gamma);
      const Operator p = lookup(s, Kind::Prime, gamma, 1);
      const Operator prev = lookup(s, Kind::Real, gamma, n - 1);
      const AffineRoot r = lattice_.real(gamma, n - 1);
      const bool prime_first = (s == Side::E) != (order_ == RecursionOrder::Normal);
      if (prime_first) return qcommutator(p, d, prev, r, lattice_, s).scaled(inv2);
      return qcommutator(prev, r, p, d, lattice_, s).scaled(inv2);
    }
    case Kind::Dual: {
      if (n == 0) return dual_finite(s, gamma);
      const Operator p = lookup(s, Kind::Prime, gamma, 1);
      const Operator prev = lookup(s, Kind::Dual, gamma, n - 1);
      const AffineRoot r = lattice_.dual(gamma, n - 1);
      const bool prime_first = (s == Side::E) == (order_ == RecursionOrder::Normal);
      if (prime_first) return qcommutator(p, d, prev, r, lattice_, s).scaled(inv2);
      return qcommutator(prev, r, p, d, lattice_, s).scaled(inv2);
    }
    case Kind::Prime: {
      const Operator a = lookup(s, Kind::Real, gamma, n - 1);
      const Operator b = lookup(s, Kind::Dual, gamma, 0);
      const AffineRoot ra = lattice_.real(gamma, n - 1), rb = lattice_.dual(gamma, 0);
      if (s == Side::E) return qcommutator(a, ra, b, rb, lattice_, s);
      return qcommutator(b, rb, a, ra, lattice_, s);
    }
  }
  throw InternalError("unreachable");
}

Operator RootVectorTable::e_real(const AffineRoot& gamma, int n) { return lookup(Side::E, Kind::Real, gamma, n); }
Operator RootVectorTable::e_dual(const AffineRoot& gamma, int n) { return lookup(Side::E, Kind::Dual, gamma, n); }
Operator RootVectorTable::e_prime(const AffineRoot& gamma, int n) { return lookup(Side::E, Kind::Prime, gamma, n); }
Operator RootVectorTable::f_real(const AffineRoot& gamma, int n) { return lookup(Side::F, Kind::Real, gamma, n); }
Operator RootVectorTable::f_dual(const AffineRoot& gamma, int n) { return lookup(Side::F, Kind::Dual, gamma, n); }
Operator RootVectorTable::f_prime(const AffineRoot& gamma, int n) { return lookup(Side::F, Kind::Prime, gamma, n); }

OpSeries RootVectorTable::e_prime_series(const AffineRoot& gamma, int N) {
  std::vector<Operator> c{Operator::zero(g_.carrier)};
  for (int n = 1; n <= N; ++n) c.push_back(e_prime(gamma, n));
  return OpSeries(Direction::Plus, std::move(c));
}

OpSeries RootVectorTable::f_prime_series(const AffineRoot& gamma, int N) {
  std::vector<Operator> c{Operator::zero(g_.carrier)};
  for (int n = 1; n <= N; ++n) c.push_back(f_prime(gamma, n));
  return OpSeries(Direction::Minus, std::move(c));
}

OpSeries RootVectorTable::imag_series(Side s, const AffineRoot& gamma, int N) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = imag_cache_.find({s, gamma});
  if (it != imag_cache_.end() && it->second.order() >= N) return it->second.truncated(N);
  // -kappa e(u) = log(1 - kappa e'(u));  kappa f(u^-1) = log(1 + kappa f'(u^-1))
  OpSeries r = s == Side::E
                   ? series::log_one_minus(e_prime_series(gamma, N).scaled(kappa())).scaled(-kappa().inverse())
                   : series::log_one_minus(f_prime_series(gamma, N).scaled(-kappa())).scaled(kappa().inverse());
  imag_cache_.insert_or_assign({s, gamma}, r);
  return r;
}

OpSeries RootVectorTable::e_imag_series(const AffineRoot& gamma, int N) { return imag_series(Side::E, gamma, N); }
OpSeries RootVectorTable::f_imag_series(const AffineRoot& gamma, int N) { return imag_series(Side::F, gamma, N); }

OpSeries RootVectorTable::phi_plus(int i, int N) {
  std::vector<Operator> c;
  for (int n = 0; n <= N; ++n) c.push_back(phi_coefficient(true, i, n));
  return OpSeries(Direction::Plus, std::move(c));
}

OpSeries RootVectorTable::phi_minus(int i, int N) {
  std::vector<Operator> c;
  for (int n = 0; n <= N; ++n) c.push_back(phi_coefficient(false, i, -n));
  return OpSeries(Direction::Minus, std::move(c));
}

namespace {
int sign_pow(int base, int n) { return (base < 0 && (n % 2 != 0)) ? -1 : 1; }
}  // namespace

Operator RootVectorTable::phi_coefficient(bool plus, int i, int n) {
  if (i < 1 || i > lattice_.rank()) throw UsageError("phi is indexed by i = 1..l");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const auto key = std::make_tuple(plus, i, n);
  auto it = phi_cache_.find(key);
  if (it != phi_cache_.end()) return it->second;
  const Operator op = build_phi(plus, i, n);
  phi_cache_.emplace(key, op);
  return op;
}

Operator RootVectorTable::build_phi(bool plus, int i, int n) {
  const std::size_t ui = static_cast<std::size_t>(i);
  const AffineRoot a = lattice_.simple(i);
  if (plus) {
    if (n < 0) return Operator::zero(g_.carrier);
    if (n == 0) return g_.qh[ui];
    // phi^+_{i,n} = (-1)^{n+1} o_i^n kappa q^{h_i} e'_{n delta, alpha_i}
    const Field c = Field(-sign_pow(-1, n) * sign_pow(o(i), n)) * kappa();
    return (g_.qh[ui] * e_prime(a, n)).scaled(c);
  }
  if (n > 0) return Operator::zero(g_.carrier);
  if (n == 0) return g_.qh_inv[ui];
  // phi^-_{i,n} = (-1)^n o_i^n kappa q^{-h_i} f'_{-n delta, alpha_i}
  const Field c = Field(sign_pow(-1, -n) * sign_pow(o(i), -n)) * kappa();
  return (g_.qh_inv[ui] * f_prime(a, -n)).scaled(c);
}

Operator RootVectorTable::xi_plus(int i, int n) {
  const AffineRoot a = lattice_.simple(i);
  if (n >= 0) return e_real(a, n).scaled(Field(sign_pow(-1, n) * sign_pow(o(i), n)));
  // (-1)^{n+1} o_i^n q^{-h_i} f_{(delta - alpha_i) - (n+1) delta}
  return (g_.qh_inv[static_cast<std::size_t>(i)] * f_dual(a, -n - 1))
      .scaled(Field(sign_pow(-1, n + 1) * sign_pow(o(i), n)));
}

Operator RootVectorTable::xi_minus(int i, int n) {
  const AffineRoot a = lattice_.simple(i);
  // n > 0: (-1)^{n+1} o_i^n e_{(delta - alpha_i) + (n-1) delta} q^{h_i}. The sign
  // (-1)^n o_i^{n+1} fails [xi+_{i,0}, xi-_{i,1}] = phi+_{i,1} / kappa.
  if (n > 0)
    return (e_dual(a, n - 1) * g_.qh[static_cast<std::size_t>(i)])
        .scaled(Field(sign_pow(-1, n + 1) * sign_pow(o(i), n)));
  return f_real(a, -n).scaled(Field(sign_pow(-1, n) * sign_pow(o(i), n)));
}

Operator RootVectorTable::chi(int i, int n) {
  if (n == 0) throw UsageError("chi_{i,0} does not exist");
  const AffineRoot a = lattice_.simple(i);
  const Field c(sign_pow(-1, n + 1) * sign_pow(o(i), n));
  if (n > 0) return e_imag_series(a, n)[n].scaled(c);
  return f_imag_series(a, -n)[-n].scaled(c);
}

std::vector<presentations::RelationCheck> check_drinfeld_relations(RootVectorTable& t, int nmax,
                                                                   const std::vector<std::size_t>& columns,
                                                                   int max_sum) {
  if (t.images().scope != presentations::Scope::Full) throw UsageError("Drinfeld relations need the f images");
  const auto& m = t.images().carrier;
  const Field k_inv = kappa().inverse();
  const RootLattice& L = t.lattice();
  const int l = t.images().rank();
  std::vector<presentations::RelationCheck> out;
  auto add = [&](std::string name, const Operator& a, const Operator& b) {
    out.push_back({std::move(name), linop::compare_on(a, b, columns)});
  };
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const int b = L.form(L.simple(i), L.simple(j));
      for (int n = -nmax; n <= nmax; ++n)
        for (int k = -nmax; k <= nmax; ++k) {
          if (max_sum >= 0 && std::abs(n + k) > max_sum) continue;
          const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + "; " + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
          const Operator phi = i == j ? (t.phi_coefficient(true, i, n + k) - t.phi_coefficient(false, i, n + k)).scaled(k_inv)
                                      : Operator::zero(m);
          add("[xi+,xi-] " + tag, linop::commutator(t.xi_plus(i, n), t.xi_minus(j, k)), phi);
          if (n == 0) continue;
          const Field c = qnum(n * b) * Field(n).inverse();
          add("[chi,xi+] " + tag, linop::commutator(t.chi(i, n), t.xi_plus(j, k)), t.xi_plus(j, n + k).scaled(c));
          add("[chi,xi-] " + tag, linop::commutator(t.chi(i, n), t.xi_minus(j, k)), t.xi_minus(j, n + k).scaled(-c));
          if (k != 0) add("[chi,chi] " + tag, linop::commutator(t.chi(i, n), t.chi(j, k)), Operator::zero(m));
        }
    }
  return out;
}

}  // namespace qloop::cartanweyl
