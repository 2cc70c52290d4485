#include "dop/linalg.hpp"

#include "dop/error.hpp"

namespace dop {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && dop::is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || dop::is_zero(m[r][col])) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!dop::is_zero(m[row][c])) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::vector<Vector> kernel(Matrix m, std::size_t cols) {
  for (const auto& r : m)
    if (r.size() != cols) throw ContractError("kernel: ragged matrix");
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(Matrix m, const Vector& b) {
  if (m.size() != b.size()) throw ContractError("solve: dimension mismatch");
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  const auto pivots = rref(m);
  Vector x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = m[r][cols];
  }
  return x;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

}  // namespace dop
