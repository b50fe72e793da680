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

#ifndef FLATFLAG_ALGEBRA_CHARPOLY_HPP
#define FLATFLAG_ALGEBRA_CHARPOLY_HPP

#include <algorithm>
#include <vector>

#include "flatflag/algebra/matrix.hpp"

namespace flatflag {

/// Coefficients c_0, ..., c_r (ascending in t) of det(t*I - m), computed with
/// Berkowitz's algorithm. Only ring operations are used, so the result is valid
/// in any characteristic; c_r is always one.
template <class T>
std::vector<T> charpoly_berkowitz(const Matrix<T>& m) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("charpoly needs a nonempty square matrix");
  const std::size_t n = m.rows();
  const T zero = zero_like(m(0, 0));
  const T one = one_like(m(0, 0));

  // Descending coefficients of the characteristic polynomial of the leading
  // k x k block.
  std::vector<T> poly{one};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R S, -R M S, ..., -R M^{k-1} S
    std::vector<T> col;
    col.reserve(k + 2);
    col.push_back(one);
    col.push_back(-m(k, k));
    std::vector<T> v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) v.push_back(m(i, k));
    for (std::size_t step = 0; step < k; ++step) {
      T dot = zero;
      for (std::size_t j = 0; j < k; ++j) dot = dot + m(k, j) * v[j];
      col.push_back(-dot);
      if (step + 1 < k) {
        std::vector<T> next(k, zero);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) next[i] = next[i] + m(i, j) * v[j];
        v = std::move(next);
      }
    }
    std::vector<T> next(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next[i] = next[i] + col[i - j] * poly[j];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return poly;
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_CHARPOLY_HPP
