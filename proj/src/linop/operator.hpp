#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coeff/field.hpp"
#include "series/series.hpp"

namespace qloop::linop {

using coeff::Field;
using Grading = std::vector<int>;

class WeightModule;
using ModulePtr = std::shared_ptr<const WeightModule>;

/// Sparse vector over basis positions of a module. `escaped` marks an image
/// that left the truncation window, so its entries are not trustworthy.
struct SparseVec {
  std::vector<std::pair<std::size_t, Field>> entries;  // sorted, nonzero
  bool escaped = false;

  static SparseVec basis(std::size_t j) { return SparseVec{{{j, Field(1)}}, false}; }
  static SparseVec escape() { return SparseVec{{}, true}; }
  bool is_zero() const { return !escaped && entries.empty(); }
  /// Coefficient at position j (zero if absent).
  Field at(std::size_t j) const;
  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.escaped == b.escaped && a.entries == b.entries;
  }
};

/// Accumulates c * v terms and produces a sorted SparseVec.
class VecBuilder {
 public:
  void add(std::size_t pos, const Field& c);
  void add(const SparseVec& v, const Field& c);
  void mark_escaped() { escaped_ = true; }
  bool escaped() const { return escaped_; }
  SparseVec finish();

 private:
  std::vector<std::pair<std::size_t, Field>> raw_;
  bool escaped_ = false;
};

namespace detail {
class Node;
}

/// Linear operator on a truncated weight module. Operators are immutable
/// handles to a shared expression graph; each column is computed on first
/// request and cached, so only the columns a computation touches are built.
class Operator {
 public:
  Operator() = default;

  /// Operator given column by column. `weight` is the grading shift, if the
  /// operator is homogeneous.
  static Operator from_columns(ModulePtr m, std::optional<Grading> weight,
                               std::function<SparseVec(std::size_t)> column, std::string label);
  static Operator diagonal(ModulePtr m, std::function<Field(std::size_t)> eigenvalue, std::string label);
  static Operator identity(ModulePtr m);
  static Operator zero(ModulePtr m);

  Operator operator*(const Operator& o) const;  // composition: (*this) after o
  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator-() const { return scaled(Field(-1)); }
  Operator scaled(const Field& c) const;
  friend Operator operator*(const Field& c, const Operator& a) { return a.scaled(c); }

  static Operator linear_combination(const ModulePtr& m, const std::vector<std::pair<Field, Operator>>& terms);

  bool valid() const { return node_ != nullptr; }
  const ModulePtr& module() const;
  const std::optional<Grading>& weight() const;
  const std::string& label() const;
  bool is_zero_operator() const;
  bool is_identity() const;
  bool is_diagonal() const;
  /// Eigenvalue on basis vector j (diagonal operators only).
  Field diagonal_entry(std::size_t j) const;
  /// Inverse of an invertible diagonal operator.
  Operator diagonal_inverse() const;

  const SparseVec& column(std::size_t j) const;
  SparseVec apply(const SparseVec& v) const;

 private:
  explicit Operator(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

/// Compares two operators on the given columns. Columns escaped in either
/// operand are skipped and counted; returns false on the first mismatch and
/// describes it in *why.
struct Comparison {
  bool equal = true;
  std::size_t compared = 0;
  std::size_t skipped = 0;
  std::string mismatch;
};
Comparison compare_on(const Operator& a, const Operator& b, const std::vector<std::size_t>& columns);

/// a b - c b a for the commutator-type identities.
inline Operator commutator(const Operator& a, const Operator& b, const Field& c = Field(1)) {
  return a * b - (b * a).scaled(c);
}

}  // namespace qloop::linop

namespace qloop::series {
template <>
struct Traits<linop::Operator> {
  static linop::Operator zero_like(const linop::Operator& a) { return linop::Operator::zero(a.module()); }
  static linop::Operator one_like(const linop::Operator& a) { return linop::Operator::identity(a.module()); }
  static linop::Operator invert_constant(const linop::Operator& a) { return a.diagonal_inverse(); }
  static linop::Operator scale(const linop::Operator& a, const Field& c) { return a.scaled(c); }
  static bool is_zero(const linop::Operator& a) { return a.is_zero_operator(); }
};
}  // namespace qloop::series

namespace qloop::linop {
using OpSeries = series::Series<Operator>;
}
