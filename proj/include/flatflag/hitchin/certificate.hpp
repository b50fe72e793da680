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

#ifndef FLATFLAG_HITCHIN_CERTIFICATE_HPP
#define FLATFLAG_HITCHIN_CERTIFICATE_HPP

#include <optional>

#include "flatflag/hitchin/chart.hpp"

namespace flatflag::hitchin {

enum class Verdict { Certified, NotCertified, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::NotCertified:
      return "not_certified";
    case Verdict::Unknown:
      return "unknown";
  }
  return "";
}

struct Certificate {
  CharPolyP charpoly;
  Verdict verdict = Verdict::Unknown;
  /// The function whose square-ness decides the verdict: s^2 - 4q for odd p,
  /// q for p = 2 with s = 0. Absent when the verdict is Unknown.
  std::optional<RatFunc> tested;
  /// Its square root when one exists in F_q(x).
  std::optional<RatFunc> root;
};

/// Rank-2 test for a psi-stable line over F_q(x). Char = t^2 - s t + q is
/// irreducible iff the decisive function is not a square, and then no line
/// (hence no flag) on the chart is stable.
inline Certificate no_flag_certificate_rank2(const ChartConn& c) {
  if (c.rank() != 2) throw PreconditionError("rank-2 certificate needs r = 2, got r = " + std::to_string(c.rank()));
  Certificate out;
  out.charpoly = char_poly_psi(c);
  const FieldPtr& f = c.field();
  const RatFunc& q = out.charpoly.coeffs[0];
  const RatFunc s = -out.charpoly.coeffs[1];
  if (f->characteristic() == 2) {
    if (!s.is_zero()) return out;
    out.tested = q;
  } else {
    out.tested = s * s - q.scaled(f->from_int(4));
  }
  out.root = sqrt_ratfunc(*out.tested);
  out.verdict = out.root ? Verdict::NotCertified : Verdict::Certified;
  return out;
}

}  // namespace flatflag::hitchin

#endif  // FLATFLAG_HITCHIN_CERTIFICATE_HPP
