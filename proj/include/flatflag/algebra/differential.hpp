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

#ifndef FLATFLAG_ALGEBRA_DIFFERENTIAL_HPP
#define FLATFLAG_ALGEBRA_DIFFERENTIAL_HPP

#include <utility>
#include <vector>

#include "flatflag/algebra/functions.hpp"
#include "flatflag/algebra/linalg.hpp"

namespace flatflag {

using VecRF = std::vector<RatFunc>;

/// T(v) = v' + A v, the action of nabla_{d/dx} on coordinate vectors.
inline VecRF apply_nabla(const MatRF& a, const VecRF& v) {
  VecRF out = a.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = out[i] + v[i].derivative();
  return out;
}

inline VecRF basis_vector(const FieldPtr& f, std::size_t n, std::size_t i) {
  VecRF v(n, RatFunc(f));
  v[i] = RatFunc::constant(f, f->one());
  return v;
}

/// Matrix of (nabla_{d/dx})^p in the given frame; column j is T^p(e_j).
/// With d/dx on a chart, (d/dx)^p = 0, so this is the p-curvature.
inline MatRF p_curvature_matrix(const MatRF& a) {
  const FieldPtr& f = a(0, 0).field();
  const std::size_t n = a.rows();
  const unsigned p = f->characteristic();
  MatRF psi = zero_matrix(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    VecRF v = basis_vector(f, n, j);
    for (unsigned step = 0; step < p; ++step) v = apply_nabla(a, v);
    psi.set_column(j, v);
  }
  return psi;
}

/// Connection matrix in the frame given by the columns of g:
/// g^{-1} a g + g^{-1} g'.
inline MatRF gauge_transform(const MatRF& a, const MatRF& g) {
  auto ginv = inverse(g);
  if (!ginv) throw PreconditionError("gauge matrix is not invertible");
  const MatRF dg = g.map([](const RatFunc& e) { return e.derivative(); });
  return (*ginv) * a * g + (*ginv) * dg;
}

/// A basis of the horizontal sections {v : v' + A v = 0}, which form a vector
/// space over F_q(x^p). Vectors are in reverse echelon form with respect to
/// the coordinates (component i, power k) of v_i = sum_k x^k w_{i,k}(x^p),
/// scanned from the last component and highest power down, and fully reduced.
struct HorizontalBasis {
  std::vector<VecRF> vectors;
  /// (component, power) of each vector's pivot coordinate, in vector order.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

inline HorizontalBasis horizontal_sections(const MatRF& a) {
  const FieldPtr& f = a(0, 0).field();
  const Field& fld = *f;
  const std::size_t r = a.rows();
  const std::size_t p = fld.characteristic();
  const std::size_t n = r * p;

  // T is F_q(x^p)-linear on F_q(x)^r = F_q(y)^{rp}; write its matrix over F_q(y).
  MatRF m(n, n, RatFunc(f));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      if (a(j, i).is_zero()) continue;
      const auto comp = frobenius_components(a(j, i));
      const RatFunc y = RatFunc::x(f);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) {
          // coefficient of x^l in x^k * a_ji
          RatFunc c = l >= k ? comp[l - k] : y * comp[l + p - k];
          if (!c.is_zero()) m(j * p + l, i * p + k) = m(j * p + l, i * p + k) + c;
        }
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l + 1 < p; ++l)
      m(i * p + l, i * p + l + 1) =
          m(i * p + l, i * p + l + 1) + RatFunc::constant(f, fld.from_int(static_cast<std::int64_t>(l + 1)));

  auto [rows, pivots] = reverse_echelon(nullspace(m));

  HorizontalBasis out;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    VecRF v(r, RatFunc(f));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < p; ++k) {
        const RatFunc& w = rows[t][i * p + k];
        if (w.is_zero()) continue;
        v[i] = v[i] + w.compose_pow(p) * RatFunc::x_pow(f, static_cast<int>(k));
      }
    for (const auto& e : apply_nabla(a, v))
      if (!e.is_zero()) throw InternalInvariantError("computed section is not horizontal");
    out.vectors.push_back(std::move(v));
    out.pivots.emplace_back(pivots[t] / p, pivots[t] % p);
  }
  return out;
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_DIFFERENTIAL_HPP
