#include "lweights/lweights.hpp"

#include <algorithm>
#include <map>

#include "coeff/linalg.hpp"
#include "gauss/gauss.hpp"

namespace qloop::lweights {

using coeff::LambdaSpec;
using coeff::QExponent;
using linop::ModuleKind;
using linop::Operator;
using linop::WeightModule;

std::string LWeightVector::render() const {
  if (vec.escaped) return "<escaped>";
  std::string out;
  for (const auto& [pos, c] : vec.entries) {
    if (!out.empty()) out += " + ";
    const std::string v = "v" + module->render_index(module->index(pos));
    if (c.is_one()) {
      out += v;
    } else {
      out += "(" + coeff::render(c) + ")*" + v;
    }
  }
  return out.empty() ? "0" : out;
}

bool LWeight::same_function(const LWeight& o) const {
  if (plus.size() != o.plus.size() || minus.size() != o.minus.size()) return false;
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (!plus[i].same_function(o.plus[i])) return false;
  for (std::size_t i = 0; i < minus.size(); ++i)
    if (!minus[i].same_function(o.minus[i])) return false;
  return true;
}

bool LWeight::constant_terms_inverse() const {
  if (minus.empty()) return true;
  for (std::size_t i = 0; i < plus.size() && i < minus.size(); ++i)
    if (!(plus[i].trimmed().num[0] * minus[i].trimmed().num[0]).is_one()) return false;
  return true;
}

namespace {

// P(x) of degree d as the coefficient list of x^d P(1/x).
std::vector<Field> reversed(std::vector<Field> p, std::size_t d) {
  p.resize(d + 1, Field(0));
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

bool LWeight::signs_consistent() const {
  if (minus.empty()) return true;
  if (minus.size() != plus.size()) return false;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    // P(u)/Q(u) = P'(u^{-1})/Q'(u^{-1}): compare after writing both in u.
    const RationalForm a = plus[i].trimmed(), b = minus[i].trimmed();
    const std::size_t d = std::max({a.num.size(), a.den.size(), b.num.size(), b.den.size()}) - 1;
    const RationalForm b_in_u{series::Direction::Plus, reversed(b.num, d), reversed(b.den, d)};
    // Cross-multiplication does not need Q(0) = 1.
    const RationalForm a_plain{series::Direction::Plus, a.num, a.den};
    if (!a_plain.same_function(b_in_u)) return false;
  }
  return true;
}

NotEigenvectorError::NotEigenvectorError(int order, std::string residual)
    : DomainError("not an eigenvector at order " + std::to_string(order) + ": residual " + residual),
      order_(order),
      residual_(std::move(residual)) {}

std::vector<Field> w_coefficients(const LambdaSpec& lambda, const BasisIndex& m) {
  if (m.size() != 3) throw UsageError("w-basis coefficients need a gl3 index (m1, m2, m3)");
  const int m2 = m[1], m3 = m[2];
  std::vector<Field> c{Field(1)};
  Field denom(1);
  for (int k = 1; k <= m2; ++k) {
    // 1 - q^{2 lambda1 - 2 lambda2 - 2 m2 + 2 m3 + 2k + 2}
    const Field f = Field(1) - coeff::qpow(QExponent{-2 * m2 + 2 * m3 + 2 * k + 2, {2, -2, 0}}, lambda);
    if (f.is_zero())
      throw DomainError("w-basis coefficient C_{" + std::to_string(k) + ",m} has a vanishing denominator for " +
                        lambda.describe());
    denom *= f;
    const Field sign(k % 2 == 0 ? 1 : -1);
    c.push_back(sign * coeff::kappa().pow(k) * coeff::qpow(-(k - 1) * k / 2) * coeff::qbinomial(m2, k) /
                denom);
  }
  return c;
}

LWeightVector build_w_basis(const ModulePtr& module, const BasisIndex& m) {
  const auto kind = module->kind();
  linop::VecBuilder acc;
  auto add = [&](const BasisIndex& idx, const Field& c) {
    std::size_t pos = 0;
    const WeightModule::Expansion* e = nullptr;
    switch (module->resolve(idx, &pos, &e)) {
      case WeightModule::Target::Inside:
        acc.add(pos, c);
        break;
      case WeightModule::Target::Reduces:
        for (const auto& [p, x] : *e) acc.add(p, x * c);
        break;
      case WeightModule::Target::Vanishes:
        break;
      case WeightModule::Target::Escapes:
        throw EscapeError("basis vector v" + module->render_index(idx) + " is outside the truncation window of " +
                          module->describe());
    }
  };
  if (kind == ModuleKind::VermaGl3 || kind == ModuleKind::FiniteGl3) {
    const auto c = w_coefficients(module->lambda(), m);
    for (int k = 0; k < static_cast<int>(c.size()); ++k) add({m[0] + k, m[1] - k, m[2] + k}, c[static_cast<std::size_t>(k)]);
  } else {
    if (!module->find(m)) {
      if (module->is_finite()) throw UsageError("v" + module->render_index(m) + " is not a basis vector of " + module->describe());
    }
    add(m, Field(1));
  }
  SparseVec v = acc.finish();
  if (v.is_zero()) throw DomainError("w" + module->render_index(m) + " vanishes in " + module->describe());
  return {module, std::move(v), -1};
}

FieldSeries eigenvalue_series(const OpSeries& phi, const SparseVec& v) {
  if (v.escaped) throw EscapeError("eigenvalue_series on an escaped vector");
  if (v.entries.empty()) throw UsageError("eigenvalue_series on the zero vector");
  const auto& [pivot, pivot_c] = v.entries.front();
  const Field pivot_inv = pivot_c.inverse();
  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(phi.order()) + 1);
  for (int n = 0; n <= phi.order(); ++n) {
    const SparseVec w = phi[n].apply(v);
    if (w.escaped)
      throw EscapeError("phi coefficient " + std::to_string(n) +
                        " leaves the truncation window on this vector; increase the truncation bound");
    const Field c = w.at(pivot) * pivot_inv;
    linop::VecBuilder r;
    r.add(w, Field(1));
    r.add(v, -c);
    const SparseVec res = r.finish();
    if (!res.entries.empty()) {
      std::string text;
      for (const auto& [pos, x] : res.entries) {
        if (!text.empty()) text += " + ";
        text += "(" + coeff::render(x) + ")*v[" + std::to_string(pos) + "]";
      }
      throw NotEigenvectorError(n, text);
    }
    out.push_back(c);
  }
  return FieldSeries(phi.direction(), std::move(out));
}

namespace {

RationalForm reconstruct_or_throw(const FieldSeries& s, ReconstructionBounds b, const std::string& what) {
  auto r = rational_reconstruct(s, b.max_num, b.max_den);
  if (!r)
    throw DomainError("no rational form of degrees <= " + std::to_string(b.max_num) + "/" +
                      std::to_string(b.max_den) + " for " + what);
  return *r;
}

int node_count(const ModulePtr& m) {
  switch (m->kind()) {
    case ModuleKind::VermaGl2:
    case ModuleKind::FiniteGl2:
      return 1;
    case ModuleKind::VermaGl3:
    case ModuleKind::FiniteGl3:
      return 2;
    default:
      throw UsageError("the Gauss path needs a gl2 or gl3 evaluation module");
  }
}

}  // namespace

LWeight compute_lweight(cartanweyl::RootVectorTable& table, LWeightVector& v, int N, ReconstructionBounds bounds) {
  const auto& g = table.images();
  const int l = g.rank();
  const bool with_minus = g.scope == presentations::Scope::Full;
  LWeight out;
  for (int i = 1; i <= l; ++i) {
    const FieldSeries s = eigenvalue_series(table.phi_plus(i, N), v.vec);
    out.plus.push_back(reconstruct_or_throw(s, bounds, "Psi_" + std::to_string(i) + "^+"));
  }
  if (with_minus)
    for (int i = 1; i <= l; ++i) {
      const FieldSeries s = eigenvalue_series(table.phi_minus(i, N), v.vec);
      out.minus.push_back(reconstruct_or_throw(s, bounds, "Psi_" + std::to_string(i) + "^-"));
    }
  v.certified_order = std::max(v.certified_order, N);
  return out;
}

LWeight compute_lweight_gauss(LWeightVector& v, int N, ReconstructionBounds bounds) {
  const int l = node_count(v.module);
  LWeight out;
  for (int i = 1; i <= l; ++i) {
    const FieldSeries s = eigenvalue_series(gauss::gauss_phi_plus(v.module, i, N), v.vec);
    out.plus.push_back(reconstruct_or_throw(s, bounds, "Psi_" + std::to_string(i) + "^+"));
  }
  for (int i = 1; i <= l; ++i) {
    const FieldSeries s = eigenvalue_series(gauss::gauss_phi_minus(v.module, i, N), v.vec);
    out.minus.push_back(reconstruct_or_throw(s, bounds, "Psi_" + std::to_string(i) + "^-"));
  }
  v.certified_order = std::max(v.certified_order, N);
  return out;
}

std::vector<std::size_t> weight_space(const ModulePtr& module, std::size_t pos) {
  const auto& w = module->grading(pos);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < module->dim(); ++p)
    if (module->grading(p) == w) out.push_back(p);
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return linop::total_degree(module->index(a)) < linop::total_degree(module->index(b));
  });
  return out;
}

namespace {

coeff::Matrix restrict_to(const Operator& op, const std::vector<std::size_t>& positions, const std::string& label) {
  const std::size_t d = positions.size();
  std::map<std::size_t, std::size_t> where;
  for (std::size_t r = 0; r < d; ++r) where[positions[r]] = r;
  coeff::Matrix a(d, std::vector<Field>(d, Field(0)));
  for (std::size_t c = 0; c < d; ++c) {
    const SparseVec& col = op.column(positions[c]);
    if (col.escaped)
      throw EscapeError(label + " leaves the truncation window on the weight space; increase the truncation bound");
    for (const auto& [p, x] : col.entries) {
      auto it = where.find(p);
      if (it == where.end()) throw InternalError(label + " does not preserve the weight space");
      a[it->second][c] = x;
    }
  }
  return a;
}

coeff::Matrix mul(const coeff::Matrix& a, const coeff::Matrix& b) {
  const std::size_t d = a.size();
  coeff::Matrix out(d, std::vector<Field>(d, Field(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

DecompositionReport lweight_decompose(cartanweyl::RootVectorTable& table, std::size_t pos, int N) {
  if (N < 1) throw UsageError("decomposition needs series order N >= 1");
  const auto& g = table.images();
  const ModulePtr& module = g.carrier;
  DecompositionReport rep;
  rep.positions = weight_space(module, pos);
  const std::size_t d = rep.positions.size();

  std::vector<coeff::Matrix> mats;
  const bool with_minus = g.scope == presentations::Scope::Full;
  for (int i = 1; i <= g.rank(); ++i)
    for (int n = 1; n <= N; ++n) {
      rep.probes.push_back("phi+_" + std::to_string(i) + "," + std::to_string(n));
      mats.push_back(restrict_to(table.phi_coefficient(true, i, n), rep.positions, rep.probes.back()));
      if (with_minus) {
        rep.probes.push_back("phi-_" + std::to_string(i) + "," + std::to_string(-n));
        mats.push_back(restrict_to(table.phi_coefficient(false, i, -n), rep.positions, rep.probes.back()));
      }
    }

  for (std::size_t a = 0; a < mats.size(); ++a)
    for (std::size_t b = a + 1; b < mats.size(); ++b)
      if (mul(mats[a], mats[b]) != mul(mats[b], mats[a]))
        throw InternalError(rep.probes[a] + " and " + rep.probes[b] + " do not commute on the weight space");

  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = r + 1; c < d; ++c)
        if (!mats[k][r][c].is_zero()) rep.triangular = false;
  if (!rep.triangular) {
    rep.findings.push_back("phi coefficients are not triangular in the degree order of the weight space");
    return rep;
  }

  // Group the diagonal tuples; each distinct tuple is a joint eigenvalue.
  std::vector<std::vector<Field>> tuples;
  std::vector<std::size_t> mult;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<Field> t;
    for (const auto& m : mats) t.push_back(m[r][r]);
    auto it = std::find(tuples.begin(), tuples.end(), t);
    if (it == tuples.end()) {
      tuples.push_back(std::move(t));
      mult.push_back(1);
    } else {
      ++mult[static_cast<std::size_t>(it - tuples.begin())];
    }
  }

  std::size_t total = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    coeff::Matrix stacked;
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (std::size_t r = 0; r < d; ++r) {
        std::vector<Field> row = mats[k][r];
        row[r] -= tuples[t][k];
        stacked.push_back(std::move(row));
      }
    EigenBlock block;
    block.eigenvalues = tuples[t];
    block.multiplicity = mult[t];
    for (auto& x : coeff::nullspace(std::move(stacked), d)) {
      // Scale so that the lowest-degree nonzero coordinate is 1.
      Field lead(0);
      for (const auto& c : x)
        if (!c.is_zero()) {
          lead = c;
          break;
        }
      linop::VecBuilder vb;
      for (std::size_t r = 0; r < d; ++r)
        if (!x[r].is_zero()) vb.add(rep.positions[r], x[r] / lead);
      block.basis.push_back({module, vb.finish(), N});
    }
    total += block.basis.size();
    if (block.basis.size() < block.multiplicity)
      rep.findings.push_back("Jordan block: eigenvalue tuple " + std::to_string(t) + " has multiplicity " +
                             std::to_string(block.multiplicity) + " but " + std::to_string(block.basis.size()) +
                             " eigenvectors");
    rep.blocks.push_back(std::move(block));
  }
  rep.diagonalizable = total == d;
  return rep;
}

LWeight tensor_highest_lweight(const std::vector<LWeight>& factors) {
  if (factors.empty()) throw UsageError("tensor_highest_lweight needs at least one factor");
  const auto mul_forms = [](const RationalForm& a, const RationalForm& b) {
    if (a.dir != b.dir) throw UsageError("cannot multiply components of different signs");
    RationalForm out{a.dir, std::vector<Field>(a.num.size() + b.num.size() - 1, Field(0)),
                     std::vector<Field>(a.den.size() + b.den.size() - 1, Field(0))};
    for (std::size_t i = 0; i < a.num.size(); ++i)
      for (std::size_t j = 0; j < b.num.size(); ++j) out.num[i + j] += a.num[i] * b.num[j];
    for (std::size_t i = 0; i < a.den.size(); ++i)
      for (std::size_t j = 0; j < b.den.size(); ++j) out.den[i + j] += a.den[i] * b.den[j];
    return out.trimmed();
  };
  LWeight out = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const LWeight& x = factors[f];
    if (x.plus.size() != out.plus.size()) throw UsageError("tensor factors have different node sets");
    for (std::size_t i = 0; i < out.plus.size(); ++i) out.plus[i] = mul_forms(out.plus[i], x.plus[i]);
    if (x.minus.size() == out.minus.size()) {
      for (std::size_t i = 0; i < out.minus.size(); ++i) out.minus[i] = mul_forms(out.minus[i], x.minus[i]);
    } else {
      out.minus.clear();
    }
  }
  return out;
}

bool PrefundamentalReport::complete() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const PrefundamentalNode& n) { return n.factored; });
}

std::string PrefundamentalReport::render() const {
  std::string out;
  for (const auto& n : nodes) {
    if (!out.empty()) out += "; ";
    out += "node " + std::to_string(n.node) + ": ";
    if (!n.factored) {
      out += "no factorization into monomial-root linear factors";
      continue;
    }
    out += "L_zeta constant " + coeff::render(n.form.constant);
    for (const auto& f : n.form.factors) {
      const char* sign = f.power > 0 ? "+" : "-";
      for (int k = 0; k < std::abs(f.power); ++k) out += std::string(", L") + sign + "(a = " + coeff::render(f.a) + ")";
    }
  }
  return out;
}

PrefundamentalReport match_prefundamental(const LWeight& psi) {
  PrefundamentalReport rep;
  for (std::size_t i = 0; i < psi.plus.size(); ++i) {
    const RationalForm t = psi.plus[i].trimmed();
    if (t.num[0].is_zero() || t.den[0].is_zero())
      throw DomainError("Psi_" + std::to_string(i + 1) + "^+ has a zero constant term");
    PrefundamentalNode node;
    node.node = static_cast<int>(i) + 1;
    if (auto f = factorize(t)) {
      node.factored = true;
      node.form = *f;
    }
    rep.nodes.push_back(std::move(node));
  }
  return rep;
}

}  // namespace qloop::lweights
