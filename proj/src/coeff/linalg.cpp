#include "coeff/linalg.hpp"

namespace qloop::coeff {

namespace {
std::size_t weight(const Field& f) { return f.num().size() + f.den().size(); }
}  // namespace

std::vector<std::size_t> row_reduce(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    // smallest nonzero entry as pivot keeps intermediate sizes down
    std::size_t best = a.size();
    for (std::size_t r = row; r < a.size(); ++r)
      if (!a[r][c].is_zero() && (best == a.size() || weight(a[r][c]) < weight(a[best][c]))) best = r;
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const Field inv = a[row][c].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Field f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[row][k].is_zero()) a[r][k] = a[r][k] - f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return row_reduce(a).size(); }

std::vector<std::vector<Field>> nullspace(Matrix a, std::size_t cols) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Field>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Field> v(cols);
    v[f] = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Field>> solve(Matrix a, const std::vector<Field>& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = row_reduce(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Field> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace qloop::coeff
