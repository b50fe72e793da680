/*
   Copyright 2026 The flatflag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLATFLAG_ALGEBRA_LINALG_HPP
#define FLATFLAG_ALGEBRA_LINALG_HPP

#include <optional>
#include <vector>

#include "flatflag/algebra/matrix.hpp"

namespace flatflag {

inline int pivot_weight(const RatFunc& f) { return f.num().degree() + f.den().degree(); }

/// In-place reduced row echelon form over a field. Returns the pivot columns.
/// Pivots are chosen by smallest pivot_weight within each column to limit
/// coefficient growth.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      if (best == m.rows() || pivot_weight(m(i, col)) < pivot_weight(m(best, col))) best = i;
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    const T inv = one_like(m(row, col)) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column, with a
/// 1 in that free column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  const auto pivots = rref(m);
  const T zero = zero_like(m(0, 0));
  const T one = one_like(m(0, 0));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const T zero = zero_like(m(0, 0));
  const T one = one_like(m(0, 0));
  Matrix<T> aug(n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Row echelon form of a list of vectors with columns scanned from the last
/// index down to the first, fully reduced. Zero vectors are dropped. The
/// returned pivots are sorted descending, matching the order of the rows.
template <class T>
std::pair<std::vector<std::vector<T>>, std::vector<std::size_t>> reverse_echelon(
    std::vector<std::vector<T>> rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return {rows, pivots};
  const std::size_t n = rows.front().size();
  std::size_t next = 0;
  for (std::size_t c = n; c-- > 0 && next < rows.size();) {
    std::size_t best = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      if (best == rows.size() || pivot_weight(rows[i][c]) < pivot_weight(rows[best][c])) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[best], rows[next]);
    const T inv = one_like(rows[next][c]) / rows[next][c];
    for (auto& a : rows[next])
      if (!is_zero(a)) a = a * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || is_zero(rows[i][c])) continue;
      const T factor = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(rows[next][j])) rows[i][j] = rows[i][j] - factor * rows[next][j];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return {rows, pivots};
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_LINALG_HPP
