#include "linop/module.hpp"


namespace qloop::linop {

using coeff::qnum;
using coeff::qpow;

namespace {

void enumerate(std::size_t arity, int degree, BasisIndex& cur, std::size_t slot, std::vector<BasisIndex>& out) {
  if (slot + 1 == arity) {
    cur[slot] = degree;
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[slot] = k;
    enumerate(arity, degree - k, cur, slot + 1, out);
  }
}

std::vector<BasisIndex> all_indices(std::size_t arity, int bound) {
  std::vector<BasisIndex> out;
  BasisIndex cur(arity, 0);
  for (int d = 0; d <= bound; ++d) enumerate(arity, d, cur, 0, out);
  return out;
}

Grading gl2_grading(const BasisIndex& m) { return {-m[0], m[0]}; }
Grading gl3_grading(const BasisIndex& m) { return {-m[0] - m[1], m[0] - m[2], m[1] + m[2]}; }

BasisIndex shifted(const BasisIndex& m, std::initializer_list<int> d) {
  BasisIndex r = m;
  std::size_t i = 0;
  for (int x : d) r[i++] += x;
  return r;
}

QExponent lam(int c, int a, int b, int d) { return QExponent{c, {a, b, d}}; }

}  // namespace

std::optional<std::size_t> WeightModule::find(const BasisIndex& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

WeightModule::Target WeightModule::resolve(const BasisIndex& m, std::size_t* pos, const Expansion** expansion) const {
  if (auto p = find(m)) {
    *pos = *p;
    return Target::Inside;
  }
  if (!finite_) return Target::Escapes;
  auto it = reduction_.find(m);
  if (it == reduction_.end() || it->second.empty()) return Target::Vanishes;
  if (expansion) *expansion = &it->second;
  return Target::Reduces;
}

std::optional<std::size_t> WeightModule::tensor_position(std::size_t left, std::size_t right) const {
  const std::size_t width = factors_.at(1)->dim();
  const long v = pair_lookup_[left * width + right];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

void WeightModule::index_basis() {
  lookup_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) lookup_.emplace(basis_[i], i);
  grading_size_ = grading_.empty() ? 0 : grading_[0].size();
}

std::string WeightModule::render_index(const BasisIndex& m) const {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

std::vector<std::size_t> WeightModule::positions_up_to_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (total_degree(basis_[i]) <= d) out.push_back(i);
  return out;
}

std::string WeightModule::describe() const {
  switch (kind_) {
    case ModuleKind::VermaGl2:
      return "Verma gl2 lambda=" + lambda_.describe() + " M=" + std::to_string(bound_);
    case ModuleKind::VermaGl3:
      return "Verma gl3 lambda=" + lambda_.describe() + " M=" + std::to_string(bound_);
    case ModuleKind::FiniteGl2:
      return "finite gl2 lambda=" + lambda_.describe();
    case ModuleKind::FiniteGl3:
      return "finite gl3 lambda=" + lambda_.describe();
    case ModuleKind::OscPlus:
      return "oscillator W+ M=" + std::to_string(bound_);
    case ModuleKind::OscMinus:
      return "oscillator W- M=" + std::to_string(bound_);
    case ModuleKind::Tensor:
      return "(" + factors_[0]->describe() + ") x (" + factors_[1]->describe() + ") M=" + std::to_string(bound_);
  }
  return "module";
}

ModulePtr WeightModule::verma_gl2(const LambdaSpec& lambda, int bound) {
  if (bound < 0) throw UsageError("truncation bound must be non-negative");
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = ModuleKind::VermaGl2;
  m->bound_ = bound;
  m->arity_ = 1;
  m->lambda_ = lambda;
  m->basis_ = all_indices(1, bound);
  for (const auto& b : m->basis_) m->grading_.push_back(gl2_grading(b));
  m->index_basis();
  return m;
}

ModulePtr WeightModule::verma_gl3(const LambdaSpec& lambda, int bound) {
  if (bound < 0) throw UsageError("truncation bound must be non-negative");
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = ModuleKind::VermaGl3;
  m->bound_ = bound;
  m->arity_ = 3;
  m->lambda_ = lambda;
  m->basis_ = all_indices(3, bound);
  for (const auto& b : m->basis_) m->grading_.push_back(gl3_grading(b));
  m->index_basis();
  return m;
}

namespace {

using Expansion = WeightModule::Expansion;

Expansion unit_expansion(std::size_t p) { return {{p, Field(1)}}; }

void add_scaled(VecBuilder& acc, const Expansion& e, const Field& c) { acc.add(SparseVec{e, false}, c); }

// Echelon row: `vec` is the image, under the raising map, of the quotient
// vector with coordinates `expr`.
struct EchelonRow {
  SparseVec vec;
  std::size_t pivot;
  SparseVec expr;
};

}  // namespace

// Weight spaces are visited from the top down. A vector of a lower weight
// space is zero in the quotient iff all its raising images are; so the
// raising map into the already reduced spaces above is injective on the
// quotient, and Gaussian elimination on it picks a basis and expresses every
// other Verma vector in that basis.
void WeightModule::build_quotient(
    const std::vector<std::vector<BasisIndex>>& weight_spaces,
    const std::function<std::vector<std::pair<BasisIndex, Field>>(const BasisIndex&)>& raise) {
  basis_.clear();
  for (const auto& space : weight_spaces) {
    if (basis_.empty()) {
      if (space.size() != 1) throw InternalError("highest weight space must be one-dimensional");
      reduction_[space[0]] = unit_expansion(0);
      basis_.push_back(space[0]);
      continue;
    }
    std::vector<EchelonRow> rows;
    for (const auto& j : space) {
      VecBuilder img;
      for (const auto& [t, c] : raise(j)) {
        if (c.is_zero()) continue;
        auto it = reduction_.find(t);
        if (it != reduction_.end()) add_scaled(img, it->second, c);
      }
      SparseVec v = img.finish();
      VecBuilder expr;
      for (const auto& r : rows) {
        const Field x = v.at(r.pivot);
        if (x.is_zero()) continue;
        const Field f = x / r.vec.at(r.pivot);
        VecBuilder nv;
        nv.add(v, Field(1));
        nv.add(r.vec, -f);
        v = nv.finish();
        expr.add(r.expr, f);
      }
      if (v.is_zero()) {
        reduction_[j] = expr.finish().entries;
        continue;
      }
      const std::size_t p = basis_.size();
      basis_.push_back(j);
      reduction_[j] = unit_expansion(p);
      // v = image of (e_p - expr)
      VecBuilder e;
      e.add(p, Field(1));
      e.add(expr.finish(), Field(-1));
      const std::size_t pivot = v.entries.front().first;
      rows.push_back(EchelonRow{std::move(v), pivot, e.finish()});
    }
  }
}

ModulePtr WeightModule::finite_gl2(std::array<int, 2> lambda) {
  const int a = lambda[0] - lambda[1];
  if (a < 0) throw DomainError("finite gl2 module needs lambda1 >= lambda2");
  const LambdaSpec spec = LambdaSpec::integers({lambda[0], lambda[1], 0});
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = ModuleKind::FiniteGl2;
  m->arity_ = 1;
  m->finite_ = true;
  m->lambda_ = spec;
  std::vector<std::vector<BasisIndex>> spaces;
  for (int k = 0; k <= a + 1; ++k) spaces.push_back({BasisIndex{k}});
  m->build_quotient(spaces, [&spec](const BasisIndex& x) { return gl2_E_images(spec, x); });
  m->bound_ = a;
  for (const auto& b : m->basis_) m->grading_.push_back(gl2_grading(b));
  m->index_basis();
  return m;
}

ModulePtr WeightModule::finite_gl3(std::array<int, 3> lambda) {
  const int a = lambda[0] - lambda[1], b = lambda[1] - lambda[2];
  if (a < 0 || b < 0) throw DomainError("finite gl3 module needs lambda1 >= lambda2 >= lambda3");
  const LambdaSpec spec = LambdaSpec::integers(lambda);
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = ModuleKind::FiniteGl3;
  m->arity_ = 3;
  m->finite_ = true;
  m->lambda_ = spec;
  // Weight lambda - k1 alpha1 - k2 alpha2 is spanned by m with m1 + m2 = k1,
  // m2 + m3 = k2; all weights of the quotient have k1, k2 <= a + b.
  const int box = a + b + 1;
  std::vector<std::vector<BasisIndex>> spaces;
  for (int depth = 0; depth <= 2 * box; ++depth)
    for (int k1 = std::min(depth, box); k1 >= 0 && depth - k1 <= box; --k1) {
      const int k2 = depth - k1;
      std::vector<BasisIndex> space;
      for (int m2 = 0; m2 <= std::min(k1, k2); ++m2) space.push_back({k1 - m2, m2, k2 - m2});
      spaces.push_back(std::move(space));
    }
  m->build_quotient(spaces, [&spec](const BasisIndex& x) {
    auto v = gl3_E_images(spec, 1, x);
    auto e2 = gl3_E_images(spec, 2, x);
    v.insert(v.end(), e2.begin(), e2.end());
    return v;
  });
  int deg = 0;
  for (const auto& x : m->basis_) deg = std::max(deg, total_degree(x));
  m->bound_ = deg;
  for (const auto& x : m->basis_) m->grading_.push_back(gl3_grading(x));
  m->index_basis();
  return m;
}

ModulePtr WeightModule::oscillator(bool plus, int bound) {
  if (bound < 0) throw UsageError("truncation bound must be non-negative");
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = plus ? ModuleKind::OscPlus : ModuleKind::OscMinus;
  m->bound_ = bound;
  m->arity_ = 1;
  m->basis_ = all_indices(1, bound);
  // Grading by the eigenvalue of N relative to the vacuum.
  for (const auto& b : m->basis_) m->grading_.push_back({plus ? b[0] : -b[0]});
  m->index_basis();
  return m;
}

ModulePtr WeightModule::tensor(const ModulePtr& a, const ModulePtr& b, int bound) {
  auto m = std::shared_ptr<WeightModule>(new WeightModule());
  m->kind_ = ModuleKind::Tensor;
  m->bound_ = bound;
  m->arity_ = a->arity() + b->arity();
  m->finite_ = a->is_finite() && b->is_finite();
  m->factors_ = {a, b};
  m->pair_lookup_.assign(a->dim() * b->dim(), -1);
  // Enumerate by total degree so low-degree vectors come first.
  std::vector<std::tuple<int, std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j) {
      const int d = total_degree(a->index(i)) + total_degree(b->index(j));
      if (d <= bound) order.emplace_back(d, i, j);
    }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
  for (const auto& [d, i, j] : order) {
    BasisIndex idx = a->index(i);
    idx.insert(idx.end(), b->index(j).begin(), b->index(j).end());
    Grading g = a->grading(i);
    g.insert(g.end(), b->grading(j).begin(), b->grading(j).end());
    m->pair_lookup_[i * b->dim() + j] = static_cast<long>(m->basis_.size());
    m->pairs_.emplace_back(i, j);
    m->basis_.push_back(std::move(idx));
    m->grading_.push_back(std::move(g));
  }
  m->index_basis();
  return m;
}

SparseVec make_column(const WeightModule& m, const std::vector<std::pair<BasisIndex, Field>>& images) {
  VecBuilder acc;
  for (const auto& [idx, c] : images) {
    if (c.is_zero()) continue;
    for (int x : idx)
      if (x < 0) throw InternalError("nonzero coefficient on a negative index " + m.render_index(idx));
    std::size_t pos = 0;
    const WeightModule::Expansion* e = nullptr;
    switch (m.resolve(idx, &pos, &e)) {
      case WeightModule::Target::Inside:
        acc.add(pos, c);
        break;
      case WeightModule::Target::Reduces:
        for (const auto& [p, x] : *e) acc.add(p, x * c);
        break;
      case WeightModule::Target::Vanishes:
        break;
      case WeightModule::Target::Escapes:
        return SparseVec::escape();
    }
  }
  return acc.finish();
}

// ---- gl2 -------------------------------------------------------------------

std::vector<std::pair<BasisIndex, Field>> gl2_E_images(const LambdaSpec& l, const BasisIndex& m) {
  const int k = m[0];
  if (k == 0) return {};
  return {{shifted(m, {-1}), qnum(k) * qnum(lam(1 - k, 1, -1, 0), l)}};
}

std::vector<std::pair<BasisIndex, Field>> gl2_F_images(const BasisIndex& m) { return {{shifted(m, {1}), Field(1)}}; }

namespace {
void require(const ModulePtr& m, std::initializer_list<ModuleKind> kinds, const char* what) {
  for (auto k : kinds)
    if (m->kind() == k) return;
  throw UsageError(std::string(what) + " is not defined on " + m->describe());
}
}  // namespace

Operator gl2_E(const ModulePtr& m) {
  require(m, {ModuleKind::VermaGl2, ModuleKind::FiniteGl2}, "E");
  const WeightModule* raw = m.get();
  return Operator::from_columns(
      m, Grading{1, -1}, [raw](std::size_t j) { return make_column(*raw, gl2_E_images(raw->lambda(), raw->index(j))); },
      "E");
}

Operator gl2_F(const ModulePtr& m) {
  require(m, {ModuleKind::VermaGl2, ModuleKind::FiniteGl2}, "F");
  const WeightModule* raw = m.get();
  return Operator::from_columns(
      m, Grading{-1, 1}, [raw](std::size_t j) { return make_column(*raw, gl2_F_images(raw->index(j))); }, "F");
}

Operator gl2_qK(const ModulePtr& m, std::array<int, 2> nu) {
  require(m, {ModuleKind::VermaGl2, ModuleKind::FiniteGl2}, "q^K");
  const WeightModule* raw = m.get();
  return Operator::diagonal(
      m,
      [raw, nu](std::size_t j) {
        const int k = raw->index(j)[0];
        return qpow(lam(-nu[0] * k + nu[1] * k, nu[0], nu[1], 0), raw->lambda());
      },
      "q^K");
}

// ---- gl3 -------------------------------------------------------------------

std::vector<std::pair<BasisIndex, Field>> gl3_E_images(const LambdaSpec& l, int i, const BasisIndex& m) {
  const int m1 = m[0], m2 = m[1], m3 = m[2];
  std::vector<std::pair<BasisIndex, Field>> out;
  switch (i) {
    case 1:
      if (m1 > 0) out.push_back({shifted(m, {-1, 0, 0}), qnum(lam(-m1 - m2 + m3 + 1, 1, -1, 0), l) * qnum(m1)});
      if (m2 > 0) out.push_back({shifted(m, {0, -1, 1}), -qpow(lam(m2 - m3 - 2, -1, 1, 0), l) * qnum(m2)});
      break;
    case 2:
      if (m3 > 0) out.push_back({shifted(m, {0, 0, -1}), qnum(lam(-m3 + 1, 0, 1, -1), l) * qnum(m3)});
      if (m2 > 0) out.push_back({shifted(m, {1, -1, 0}), qpow(lam(-2 * m3, 0, 1, -1), l) * qnum(m2)});
      break;
    case 3:
      if (m2 > 0)
        out.push_back({shifted(m, {0, -1, 0}), coeff::qpow(-m1) * qnum(lam(-m1 - m2 - m3 + 1, 1, 0, -1), l) * qnum(m2)});
      if (m1 > 0 && m3 > 0)
        out.push_back({shifted(m, {-1, 0, -1}), -qpow(lam(-m1 - m2 + m3 + 1, 1, -1, 0), l) *
                                                    qnum(lam(-m3 + 1, 0, 1, -1), l) * qnum(m1) * qnum(m3)});
      break;
    default:
      throw UsageError("gl3 E index must be 1, 2 or 3");
  }
  return out;
}

std::vector<std::pair<BasisIndex, Field>> gl3_F_images(int i, const BasisIndex& m) {
  const int m1 = m[0], m2 = m[1];
  std::vector<std::pair<BasisIndex, Field>> out;
  switch (i) {
    case 1:
      out.push_back({shifted(m, {1, 0, 0}), Field(1)});
      break;
    case 2:
      out.push_back({shifted(m, {0, 0, 1}), coeff::qpow(-m1 + m2)});
      if (m1 > 0) out.push_back({shifted(m, {-1, 1, 0}), qnum(m1)});
      break;
    case 3:
      out.push_back({shifted(m, {0, 1, 0}), coeff::qpow(m1)});
      break;
    default:
      throw UsageError("gl3 F index must be 1, 2 or 3");
  }
  return out;
}

namespace {
Grading gl3_root_grading(int i, int sign) {
  // E1 raises K1 and lowers K2, E2 raises K2 and lowers K3, E3 = [E1, E2].
  Grading g = i == 1 ? Grading{1, -1, 0} : i == 2 ? Grading{0, 1, -1} : Grading{1, 0, -1};
  for (auto& x : g) x *= sign;
  return g;
}
}  // namespace

Operator gl3_E(const ModulePtr& m, int i) {
  require(m, {ModuleKind::VermaGl3, ModuleKind::FiniteGl3}, "E_i");
  if (i < 1 || i > 3) throw UsageError("gl3 E index must be 1, 2 or 3");
  const WeightModule* raw = m.get();
  return Operator::from_columns(
      m, gl3_root_grading(i, 1),
      [raw, i](std::size_t j) { return make_column(*raw, gl3_E_images(raw->lambda(), i, raw->index(j))); },
      "E" + std::to_string(i));
}

Operator gl3_F(const ModulePtr& m, int i) {
  require(m, {ModuleKind::VermaGl3, ModuleKind::FiniteGl3}, "F_i");
  if (i < 1 || i > 3) throw UsageError("gl3 F index must be 1, 2 or 3");
  const WeightModule* raw = m.get();
  return Operator::from_columns(
      m, gl3_root_grading(i, -1), [raw, i](std::size_t j) { return make_column(*raw, gl3_F_images(i, raw->index(j))); },
      "F" + std::to_string(i));
}

Operator gl3_qK(const ModulePtr& m, std::array<int, 3> nu) {
  require(m, {ModuleKind::VermaGl3, ModuleKind::FiniteGl3}, "q^K");
  const WeightModule* raw = m.get();
  return Operator::diagonal(
      m,
      [raw, nu](std::size_t j) {
        const auto& x = raw->index(j);
        const int c = nu[0] * (-x[0] - x[1]) + nu[1] * (x[0] - x[2]) + nu[2] * (x[1] + x[2]);
        return qpow(lam(c, nu[0], nu[1], nu[2]), raw->lambda());
      },
      "q^K");
}

// ---- oscillators -----------------------------------------------------------

Operator osc_b(const ModulePtr& m) {
  require(m, {ModuleKind::OscPlus, ModuleKind::OscMinus}, "b");
  const WeightModule* raw = m.get();
  const bool plus = m->kind() == ModuleKind::OscPlus;
  return Operator::from_columns(
      m, Grading{plus ? -1 : -1},
      [raw, plus](std::size_t j) {
        const int k = raw->index(j)[0];
        if (plus) return make_column(*raw, {{BasisIndex{k - 1}, k > 0 ? qnum(k) : Field()}});
        return make_column(*raw, {{BasisIndex{k + 1}, Field(1)}});
      },
      "b");
}

Operator osc_bdag(const ModulePtr& m) {
  require(m, {ModuleKind::OscPlus, ModuleKind::OscMinus}, "b^dagger");
  const WeightModule* raw = m.get();
  const bool plus = m->kind() == ModuleKind::OscPlus;
  return Operator::from_columns(
      m, Grading{1},
      [raw, plus](std::size_t j) {
        const int k = raw->index(j)[0];
        if (plus) return make_column(*raw, {{BasisIndex{k + 1}, Field(1)}});
        return make_column(*raw, {{BasisIndex{k - 1}, k > 0 ? -qnum(k) : Field()}});
      },
      "bdag");
}

Operator osc_qN(const ModulePtr& m, int nu) {
  require(m, {ModuleKind::OscPlus, ModuleKind::OscMinus}, "q^N");
  const WeightModule* raw = m.get();
  const bool plus = m->kind() == ModuleKind::OscPlus;
  return Operator::diagonal(
      m,
      [raw, plus, nu](std::size_t j) {
        const int k = raw->index(j)[0];
        return coeff::qpow(plus ? nu * k : -nu * (k + 1));
      },
      "q^N");
}

// ---- tensor products -------------------------------------------------------

Operator tensor_op(const ModulePtr& t, const Operator& a, const Operator& b) {
  if (t->kind() != ModuleKind::Tensor) throw UsageError("tensor_op needs a tensor module");
  if (a.module() != t->factors()[0] || b.module() != t->factors()[1])
    throw UsageError("operator factors do not match the tensor module");
  if (a.is_identity() && b.is_identity()) return Operator::identity(t);
  if (a.is_zero_operator() || b.is_zero_operator()) return Operator::zero(t);
  std::optional<Grading> w;
  if (a.weight() && b.weight()) {
    Grading g = *a.weight();
    g.insert(g.end(), b.weight()->begin(), b.weight()->end());
    w = g;
  }
  const WeightModule* raw = t.get();
  if (a.is_diagonal() && b.is_diagonal()) {
    return Operator::diagonal(
        t,
        [raw, a, b](std::size_t j) {
          const auto [i, k] = raw->tensor_pair(j);
          return a.diagonal_entry(i) * b.diagonal_entry(k);
        },
        a.label() + "(x)" + b.label());
  }
  return Operator::from_columns(
      t, w,
      [raw, a, b](std::size_t j) {
        const auto [i, k] = raw->tensor_pair(j);
        const SparseVec& x = a.column(i);
        const SparseVec& y = b.column(k);
        if (x.escaped || y.escaped) return SparseVec::escape();
        VecBuilder acc;
        for (const auto& [r, c] : x.entries)
          for (const auto& [s, d] : y.entries) {
            auto p = raw->tensor_position(r, s);
            if (!p) return SparseVec::escape();
            acc.add(*p, c * d);
          }
        return acc.finish();
      },
      a.label() + "(x)" + b.label());
}

Operator lift_left(const ModulePtr& t, const Operator& a) {
  return tensor_op(t, a, Operator::identity(t->factors()[1]));
}

Operator lift_right(const ModulePtr& t, const Operator& b) {
  return tensor_op(t, Operator::identity(t->factors()[0]), b);
}

}  // namespace qloop::linop
