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

#ifndef FLATFLAG_PONE_SAMPLE_HPP
#define FLATFLAG_PONE_SAMPLE_HPP

#include "flatflag/algebra/linalg.hpp"
#include "flatflag/pone/connection.hpp"
#include "flatflag/random.hpp"

namespace flatflag::pone {

/// r degrees, each a multiple of `step` with |d| <= bound, sorted descending.
inline std::vector<std::int64_t> sample_degrees(Sampler& s, std::size_t r, std::int64_t step, std::int64_t bound) {
  std::vector<std::int64_t> d;
  const std::int64_t top = bound / step;
  for (std::size_t i = 0; i < r; ++i) d.push_back(step * s.uniform(-top, top));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Random valid connection: each allowed entry is filled with probability
/// `density` by a polynomial of the largest admissible degree.
inline Conn0 sample_connection(Sampler& s, const FieldPtr& f, std::vector<std::int64_t> degrees,
                               double density = 0.7) {
  const std::size_t r = degrees.size();
  MatPoly a(r, r, Poly(f));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = j + 1; i < r; ++i) {
      const std::int64_t room = degrees[j] - degrees[i] - 2;
      if (room >= 0 && s.coin(density)) a(j, i) = s.poly(f, static_cast<int>(room));
    }
  return Conn0(f, std::move(degrees), std::move(a));
}

/// Random automorphism of the split bundle: polynomial, block upper
/// triangular by degree, with constant invertible blocks on equal degrees.
inline MatRF sample_automorphism(Sampler& s, const FieldPtr& f, const std::vector<std::int64_t>& degrees) {
  const std::size_t r = degrees.size();
  for (;;) {
    MatRF h = zero_matrix(f, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t room = degrees[j] - degrees[i];
        if (room >= 0) h(j, i) = RatFunc(s.poly(f, static_cast<int>(room)));
      }
    if (inverse(h)) return h;
  }
}

/// Random connection with vanishing p-curvature, -H' H^{-1} for a random
/// automorphism H. Degrees must be multiples of p.
inline Conn0 sample_flat_connection(Sampler& s, const FieldPtr& f, std::vector<std::int64_t> degrees) {
  const MatRF h = sample_automorphism(s, f, degrees);
  const MatRF dh = h.map([](const RatFunc& e) { return e.derivative(); });
  MatRF a = -(dh * (*inverse(h)));
  return Conn0(f, std::move(degrees), to_poly(a));
}

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_SAMPLE_HPP
