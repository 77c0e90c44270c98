#pragma once

// Dense exact Gaussian elimination over Q or Q(sqrt d). Only used for the
// small systems behind seed discovery and the completeness rank.

#include <cstddef>
#include <utility>
#include <vector>

#include "radial/scalar.hpp"

namespace radial::linalg {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

template <typename F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
template <typename F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);

    const F inv = F(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const F factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!is_zero(m[row][c])) m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <typename F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
template <typename F>
Matrix<F> nullspace(Matrix<F> m, std::size_t cols) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace radial::linalg
