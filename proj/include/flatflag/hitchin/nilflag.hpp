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

#ifndef FLATFLAG_HITCHIN_NILFLAG_HPP
#define FLATFLAG_HITCHIN_NILFLAG_HPP

#include "flatflag/algebra/linalg.hpp"
#include "flatflag/hitchin/chart.hpp"

namespace flatflag::hitchin {

struct NilFlag {
  /// Columns g_1, ..., g_r; step j of the flag is spanned by g_1, ..., g_j.
  MatRF gauge;
  /// G^{-1} A G + G^{-1} G', upper triangular.
  MatRF transformed;
  /// perm[j] = coordinate index that g_{j+1} replaced when the basis was
  /// extended; a permutation of 0..r-1.
  std::vector<std::size_t> perm;
};

namespace detail {

inline NilFlag nil_flag(const MatRF& a) {
  const FieldPtr& f = a(0, 0).field();
  const std::size_t r = a.rows();
  const HorizontalBasis hb = horizontal_sections(a);
  if (hb.vectors.empty()) throw NeedsExtensionError("no horizontal section over the coefficient field");
  // Take the echelon vector with the lowest pivot.
  const VecRF& v = hb.vectors.back();
  const std::size_t i0 = hb.pivots.back().first;

  MatRF g1 = zero_matrix(f, r);
  g1.set_column(0, v);
  for (std::size_t j = 0, col = 1; j < r; ++j)
    if (j != i0) g1(j, col++) = RatFunc::constant(f, f->one());
  const MatRF b = gauge_transform(a, g1);

  NilFlag out{g1, b, {i0}};
  if (r == 1) return out;

  MatRF sub = zero_matrix(f, r - 1);
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 1; j < r; ++j) sub(i - 1, j - 1) = b(i, j);
  const NilFlag rest = nil_flag(sub);

  MatRF lift = identity_matrix(f, r);
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 1; j < r; ++j) lift(i, j) = rest.gauge(i - 1, j - 1);
  out.gauge = g1 * lift;
  out.transformed = gauge_transform(b, lift);
  // Sub-block coordinate k is original coordinate k if k < i0, else k + 1.
  for (auto k : rest.perm) out.perm.push_back(k < i0 ? k : k + 1);
  return out;
}

}  // namespace detail

/// Flag of the chart connection when its p-curvature is nilpotent: peel off
/// a horizontal line, pass to the quotient, repeat.
inline NilFlag nilpotent_flag_chart(const ChartConn& c) {
  const MatRF psi = p_curvature_chart(c);
  if (!matrix_pow(psi, static_cast<unsigned>(c.rank())).is_zero())
    throw PreconditionError("p-curvature is not nilpotent");
  NilFlag out = detail::nil_flag(c.matrix());
  const MatRF& t = out.transformed;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!t(i, j).is_zero()) throw InternalInvariantError("gauged connection is not upper triangular");
  if (gauge_transform(c.matrix(), out.gauge) != t) throw InternalInvariantError("gauge does not reproduce the result");
  return out;
}

}  // namespace flatflag::hitchin

#endif  // FLATFLAG_HITCHIN_NILFLAG_HPP
