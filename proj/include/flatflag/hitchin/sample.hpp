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

#ifndef FLATFLAG_HITCHIN_SAMPLE_HPP
#define FLATFLAG_HITCHIN_SAMPLE_HPP

#include "flatflag/hitchin/chart.hpp"
#include "flatflag/random.hpp"

namespace flatflag::hitchin {

/// Chart connection with entries of degree <= deg; a fraction of the entries
/// get a nonconstant denominator when `rational` is set.
inline ChartConn sample_chart(Sampler& s, const FieldPtr& f, std::size_t r, int deg, bool rational = false) {
  MatRF a = zero_matrix(f, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!s.coin(0.75)) continue;
      a(i, j) = rational && s.coin(0.3) ? s.ratfunc(f, deg) : RatFunc(s.poly(f, deg));
    }
  return ChartConn(f, std::move(a));
}

/// G^{-1} N G + G^{-1} G' for random strictly upper triangular N and random
/// unimodular G; nilpotent p-curvature by construction.
inline ChartConn sample_nilpotent_chart(Sampler& s, const FieldPtr& f, std::size_t r, int deg) {
  MatRF n = zero_matrix(f, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) n(i, j) = RatFunc(s.poly(f, deg));
  return ChartConn(f, gauge_transform(n, s.unimodular(f, r, 1, static_cast<int>(r))));
}

}  // namespace flatflag::hitchin

#endif  // FLATFLAG_HITCHIN_SAMPLE_HPP
