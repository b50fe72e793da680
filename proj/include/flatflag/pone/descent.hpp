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

#ifndef FLATFLAG_PONE_DESCENT_HPP
#define FLATFLAG_PONE_DESCENT_HPP

#include "flatflag/pone/curvature.hpp"

namespace flatflag::pone {

struct Descent {
  /// Splitting type on the Frobenius twist, degrees d_i / p.
  BundleP1 bundle;
  /// Columns are horizontal sections; unit upper triangular, polynomial.
  MatRF frame;
};

/// Cartier descent of a connection with vanishing p-curvature. The frame is
/// the reduced echelon basis of the horizontal sections, so it is canonical.
inline Descent cartier_descent(const Conn0& c) {
  if (!p_curvature(c).is_zero()) throw PreconditionError("cartier_descent needs vanishing p-curvature");
  const FieldPtr& f = c.field();
  const std::size_t r = c.rank();
  const std::int64_t p = c.characteristic();

  std::vector<std::int64_t> down;
  for (auto d : c.degrees()) {
    if (d % p != 0) throw PreconditionError("degree " + std::to_string(d) + " is not divisible by p");
    down.push_back(d / p);
  }

  const HorizontalBasis hb = horizontal_sections(c.matrix_rf());
  if (hb.vectors.size() < r)
    throw NeedsExtensionError("only " + std::to_string(hb.vectors.size()) + " of " + std::to_string(r) +
                              " horizontal sections found over the coefficient field");

  // Pivots come out descending; the section with pivot (i, 0) is column i.
  MatRF frame = zero_matrix(f, r);
  for (std::size_t t = 0; t < r; ++t) {
    const auto [comp, power] = hb.pivots[t];
    if (power != 0 || comp != r - 1 - t) throw InternalInvariantError("horizontal frame is not unitriangular");
    frame.set_column(comp, hb.vectors[t]);
  }
  const auto& d = c.degrees();
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      const RatFunc& e = frame(j, i);
      if (e.is_zero()) continue;
      if (!e.is_polynomial() || (j > i) || e.num().degree() > d[j] - d[i])
        throw InternalInvariantError("horizontal frame is not a bundle automorphism");
    }
  return Descent{BundleP1(std::move(down)), std::move(frame)};
}

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_DESCENT_HPP
