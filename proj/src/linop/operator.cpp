#include "linop/operator.hpp"

#include <algorithm>
#include <mutex>

#include "linop/module.hpp"

namespace qloop::linop {

Field SparseVec::at(std::size_t j) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), j,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries.end() && it->first == j) return it->second;
  return Field();
}

void VecBuilder::add(std::size_t pos, const Field& c) {
  if (!c.is_zero()) raw_.emplace_back(pos, c);
}

void VecBuilder::add(const SparseVec& v, const Field& c) {
  if (c.is_zero()) return;
  if (v.escaped) {
    escaped_ = true;
    return;
  }
  for (const auto& [p, x] : v.entries) raw_.emplace_back(p, c.is_one() ? x : x * c);
}

SparseVec VecBuilder::finish() {
  SparseVec out;
  out.escaped = escaped_;
  if (escaped_) return out;
  std::stable_sort(raw_.begin(), raw_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < raw_.size();) {
    const std::size_t p = raw_[i].first;
    Field acc = std::move(raw_[i].second);
    ++i;
    while (i < raw_.size() && raw_[i].first == p) {
      acc += raw_[i].second;
      ++i;
    }
    if (!acc.is_zero()) out.entries.emplace_back(p, std::move(acc));
  }
  raw_.clear();
  return out;
}

namespace detail {

enum class Kind { Generic, Diagonal, Identity, Zero, Compose, Combination };

class Node {
 public:
  Node(ModulePtr m, std::optional<Grading> w, std::string label, Kind kind, bool diagonal)
      : module(std::move(m)), weight(std::move(w)), label(std::move(label)), kind(kind), diagonal(diagonal) {
    cache_.resize(module->dim());
  }
  virtual ~Node() = default;

  const SparseVec& column(std::size_t j) const {
    if (j >= cache_.size()) throw UsageError("column index outside the module");
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (cache_[j]) return *cache_[j];
    }
    auto v = std::make_unique<SparseVec>(compute(j));
    std::lock_guard<std::mutex> lock(mu_);
    if (!cache_[j]) cache_[j] = std::move(v);
    return *cache_[j];
  }

  virtual SparseVec compute(std::size_t j) const = 0;

  ModulePtr module;
  std::optional<Grading> weight;
  std::string label;
  Kind kind;
  bool diagonal;

 private:
  mutable std::vector<std::unique_ptr<SparseVec>> cache_;
  mutable std::mutex mu_;
};

class GenericNode : public Node {
 public:
  GenericNode(ModulePtr m, std::optional<Grading> w, std::string label, std::function<SparseVec(std::size_t)> f)
      : Node(std::move(m), std::move(w), std::move(label), Kind::Generic, false), f_(std::move(f)) {}
  SparseVec compute(std::size_t j) const override { return f_(j); }

 private:
  std::function<SparseVec(std::size_t)> f_;
};

class DiagonalNode : public Node {
 public:
  DiagonalNode(ModulePtr m, std::string label, std::function<Field(std::size_t)> f)
      : Node(m, Grading(m->grading_size(), 0), std::move(label), Kind::Diagonal, true), f_(std::move(f)) {}
  SparseVec compute(std::size_t j) const override {
    Field v = f_(j);
    if (v.is_zero()) return {};
    return SparseVec{{{j, std::move(v)}}, false};
  }

 private:
  std::function<Field(std::size_t)> f_;
};

class IdentityNode : public Node {
 public:
  explicit IdentityNode(ModulePtr m)
      : Node(m, Grading(m->grading_size(), 0), "1", Kind::Identity, true) {}
  SparseVec compute(std::size_t j) const override { return SparseVec::basis(j); }
};

class ZeroNode : public Node {
 public:
  explicit ZeroNode(ModulePtr m) : Node(std::move(m), std::nullopt, "0", Kind::Zero, true) {}
  SparseVec compute(std::size_t) const override { return {}; }
};

class ComposeNode : public Node {
 public:
  ComposeNode(std::shared_ptr<const Node> a, std::shared_ptr<const Node> b, std::optional<Grading> w)
      : Node(a->module, std::move(w), "(" + a->label + " " + b->label + ")", Kind::Compose,
             a->diagonal && b->diagonal),
        a_(std::move(a)),
        b_(std::move(b)) {}
  SparseVec compute(std::size_t j) const override {
    const SparseVec& bj = b_->column(j);
    if (bj.escaped) return SparseVec::escape();
    VecBuilder acc;
    for (const auto& [r, c] : bj.entries) {
      const SparseVec& ar = a_->column(r);
      if (ar.escaped) return SparseVec::escape();
      acc.add(ar, c);
    }
    return acc.finish();
  }

 private:
  std::shared_ptr<const Node> a_, b_;
};

class CombinationNode : public Node {
 public:
  CombinationNode(ModulePtr m, std::vector<std::pair<Field, std::shared_ptr<const Node>>> terms,
                  std::optional<Grading> w, bool diagonal)
      : Node(std::move(m), std::move(w), "lin", Kind::Combination, diagonal), terms_(std::move(terms)) {}
  SparseVec compute(std::size_t j) const override {
    VecBuilder acc;
    for (const auto& [c, n] : terms_) {
      acc.add(n->column(j), c);
      if (acc.escaped()) return SparseVec::escape();
    }
    return acc.finish();
  }
  const std::vector<std::pair<Field, std::shared_ptr<const Node>>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<Field, std::shared_ptr<const Node>>> terms_;
};

}  // namespace detail

using detail::Kind;

Operator Operator::from_columns(ModulePtr m, std::optional<Grading> weight,
                                std::function<SparseVec(std::size_t)> column, std::string label) {
  return Operator(std::make_shared<detail::GenericNode>(std::move(m), std::move(weight), std::move(label),
                                                        std::move(column)));
}

Operator Operator::diagonal(ModulePtr m, std::function<Field(std::size_t)> eigenvalue, std::string label) {
  return Operator(std::make_shared<detail::DiagonalNode>(std::move(m), std::move(label), std::move(eigenvalue)));
}

Operator Operator::identity(ModulePtr m) { return Operator(std::make_shared<detail::IdentityNode>(std::move(m))); }

Operator Operator::zero(ModulePtr m) { return Operator(std::make_shared<detail::ZeroNode>(std::move(m))); }

const ModulePtr& Operator::module() const { return node_->module; }
const std::optional<Grading>& Operator::weight() const { return node_->weight; }
const std::string& Operator::label() const { return node_->label; }
bool Operator::is_zero_operator() const { return node_->kind == Kind::Zero; }
bool Operator::is_identity() const { return node_->kind == Kind::Identity; }
bool Operator::is_diagonal() const { return node_->diagonal; }

Field Operator::diagonal_entry(std::size_t j) const {
  if (!is_diagonal()) throw InternalError("diagonal_entry on a non-diagonal operator");
  return column(j).at(j);
}

Operator Operator::diagonal_inverse() const {
  if (!is_diagonal()) throw DomainError("only diagonal operators are inverted here");
  if (is_identity()) return *this;
  if (is_zero_operator()) throw DomainError("zero operator is not invertible");
  const Operator self = *this;
  return diagonal(
      module(),
      [self](std::size_t j) {
        const Field v = self.diagonal_entry(j);
        if (v.is_zero()) throw DomainError("diagonal operator with a zero eigenvalue is not invertible");
        return v.inverse();
      },
      "inv(" + label() + ")");
}

const SparseVec& Operator::column(std::size_t j) const { return node_->column(j); }

SparseVec Operator::apply(const SparseVec& v) const {
  if (v.escaped) return SparseVec::escape();
  VecBuilder acc;
  for (const auto& [r, c] : v.entries) {
    acc.add(column(r), c);
    if (acc.escaped()) return SparseVec::escape();
  }
  return acc.finish();
}

namespace {

void check_same_module(const Operator& a, const Operator& b) {
  if (a.module() != b.module()) throw UsageError("operators act on different modules");
}

std::optional<Grading> sum_weights(const std::optional<Grading>& a, const std::optional<Grading>& b) {
  if (!a || !b || a->size() != b->size()) return std::nullopt;
  Grading g(a->size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (*a)[i] + (*b)[i];
  return g;
}

}  // namespace

Operator Operator::operator*(const Operator& o) const {
  check_same_module(*this, o);
  if (is_zero_operator() || o.is_zero_operator()) return zero(module());
  if (is_identity()) return o;
  if (o.is_identity()) return *this;
  return Operator(std::make_shared<detail::ComposeNode>(node_, o.node_, sum_weights(weight(), o.weight())));
}

Operator Operator::linear_combination(const ModulePtr& m, const std::vector<std::pair<Field, Operator>>& terms) {
  std::vector<std::pair<Field, std::shared_ptr<const detail::Node>>> flat;
  auto push = [&flat](const Field& c, const std::shared_ptr<const detail::Node>& n) {
    if (c.is_zero() || n->kind == Kind::Zero) return;
    for (auto& [c0, n0] : flat)
      if (n0 == n) {
        c0 += c;
        return;
      }
    flat.emplace_back(c, n);
  };
  for (const auto& [c, op] : terms) {
    if (op.module() != m) throw UsageError("operators act on different modules");
    if (op.node_->kind == Kind::Combination) {
      const auto& inner = static_cast<const detail::CombinationNode&>(*op.node_);
      for (const auto& [c1, n1] : inner.terms()) push(c * c1, n1);
    } else {
      push(c, op.node_);
    }
  }
  flat.erase(std::remove_if(flat.begin(), flat.end(), [](const auto& t) { return t.first.is_zero(); }), flat.end());
  if (flat.empty()) return zero(m);
  if (flat.size() == 1 && flat[0].first.is_one()) return Operator(flat[0].second);
  std::optional<Grading> w = flat[0].second->weight;
  bool diagonal = true;
  for (const auto& [c, n] : flat) {
    if (!n->weight || !w || *n->weight != *w) w.reset();
    diagonal = diagonal && n->diagonal;
  }
  return Operator(std::make_shared<detail::CombinationNode>(m, std::move(flat), std::move(w), diagonal));
}

Operator Operator::operator+(const Operator& o) const {
  check_same_module(*this, o);
  return linear_combination(module(), {{Field(1), *this}, {Field(1), o}});
}

Operator Operator::operator-(const Operator& o) const {
  check_same_module(*this, o);
  return linear_combination(module(), {{Field(1), *this}, {Field(-1), o}});
}

Operator Operator::scaled(const Field& c) const {
  if (c.is_one()) return *this;
  return linear_combination(module(), {{c, *this}});
}

Comparison compare_on(const Operator& a, const Operator& b, const std::vector<std::size_t>& columns) {
  Comparison r;
  for (std::size_t j : columns) {
    const SparseVec& x = a.column(j);
    const SparseVec& y = b.column(j);
    if (x.escaped || y.escaped) {
      ++r.skipped;
      continue;
    }
    ++r.compared;
    if (x.entries != y.entries) {
      r.equal = false;
      const auto& idx = a.module()->index(j);
      std::string s = "column " + a.module()->render_index(idx) + ":";
      VecBuilder d;
      d.add(x, Field(1));
      d.add(y, Field(-1));
      const SparseVec diff = d.finish();
      for (const auto& [p, c] : diff.entries) {
        s += " " + a.module()->render_index(a.module()->index(p)) + " -> " + coeff::render(c) + ";";
        if (s.size() > 400) break;
      }
      r.mismatch = s;
      return r;
    }
  }
  return r;
}

}  // namespace qloop::linop
