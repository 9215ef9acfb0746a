#pragma once

#include "qflag/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qflag {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix &m) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto &x : m[r])
      x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
inline Matrix nullspace(Matrix m, std::size_t cols) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix transpose(const Matrix &m, std::size_t cols) {
  Matrix t(cols, std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      t[j][i] = m[i][j];
  return t;
}

} // namespace qflag
