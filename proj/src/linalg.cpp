#include "cct/linalg.hpp"

#include <cstddef>
#include <utility>

#include "cct/errors.hpp"

namespace cct {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("determinant: matrix not square");

  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rk]);
    const Rational inv = m[rk][col];
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / inv;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

LinearSolve solve_linear(Matrix a, Row b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DimensionMismatch("solve_linear: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  std::vector<std::size_t> pivot_col;  // pivot column of each eliminated row
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    std::swap(b[pivot], b[rk]);
    const Rational inv = a[rk][col];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / inv;
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rk][c];
      b[r] -= factor * b[rk];
    }
    pivot_col.push_back(col);
    ++rk;
  }

  LinearSolve out;
  for (std::size_t r = rk; r < rows; ++r) {
    if (b[r] != 0) return out;  // 0 = nonzero: inconsistent
  }
  out.consistent = true;
  out.unique = (rk == cols);
  out.solution.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rk; ++r) {
    out.solution[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
  }
  return out;
}

}  // namespace cct
