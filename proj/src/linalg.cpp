#include "semicurve/linalg.hpp"

namespace semicurve {

std::vector<std::size_t> rref(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Matrix nullspace(Matrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_in_span(const Matrix& vectors, const Vector& target) {
  // Columns are the vectors; augment with the target.
  const std::size_t n = vectors.size();
  Matrix a(target.size(), Vector(n + 1));
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = vectors[j][i];
    a[i][n] = target[i];
  }
  const auto pivots = rref(a, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n];
  return x;
}

}  // namespace semicurve
