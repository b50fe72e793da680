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

#ifndef FLATFLAG_PONE_CURVATURE_HPP
#define FLATFLAG_PONE_CURVATURE_HPP

#include "flatflag/algebra/differential.hpp"
#include "flatflag/pone/connection.hpp"

namespace flatflag::pone {

/// p-curvature (nabla_{d/dx})^p in the standard frame.
inline MatRF p_curvature(const Conn0& c) { return p_curvature_matrix(c.matrix_rf()); }

/// p^{m+1}-curvature of a level-m object: the p-curvature of its base with
/// the twist coordinate y replaced by x^{p^m}.
inline MatRF pm1_curvature(const DmBundle& d) {
  const MatRF psi = p_curvature(d.base);
  if (d.level == 0) return psi;
  const auto scale = static_cast<std::size_t>(detail::power_sat(d.base.characteristic(), d.level));
  return psi.map([scale](const RatFunc& e) { return e.compose_pow(scale); });
}

/// Pullback along the s-fold relative Frobenius: the same base at level m+s.
inline DmBundle frobenius_pullback(const DmBundle& d, unsigned s) {
  if (s < 1) throw PreconditionError("frobenius_pullback needs s >= 1");
  return DmBundle{d.level + s, d.base};
}

inline bool is_nilpotent(const MatRF& m) { return matrix_pow(m, static_cast<unsigned>(m.rows())).is_zero(); }

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_CURVATURE_HPP
