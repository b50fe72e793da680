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

#ifndef FLATFLAG_PONE_FLAG_HPP
#define FLATFLAG_PONE_FLAG_HPP

#include <algorithm>
#include <numeric>

#include "flatflag/pone/connection.hpp"

namespace flatflag::pone {

/// Complete flag by coordinate subspaces: step j is spanned by
/// e_{perm[0]}, ..., e_{perm[j-1]} (0-based indices).
struct FlagP1 {
  std::vector<std::size_t> perm;
  /// Degree of each graded piece, in flag order, on the represented bundle.
  std::vector<std::int64_t> graded_degrees;

  friend bool operator==(const FlagP1&, const FlagP1&) = default;
};

/// True iff every step of f is preserved by the connection. Coordinate
/// subspaces of a split bundle are always subbundles, so only stability and
/// the shape of perm need checking.
inline bool verify_flag(const Conn0& c, const FlagP1& f) {
  const std::size_t r = c.rank();
  if (f.perm.size() != r) return false;
  std::vector<bool> seen(r, false);
  for (auto i : f.perm) {
    if (i >= r || seen[i]) return false;
    seen[i] = true;
  }
  // Step j is stable iff A(i, s) = 0 for s inside and i outside; position
  // gives the first step containing each index.
  std::vector<std::size_t> position(r);
  for (std::size_t j = 0; j < r; ++j) position[f.perm[j]] = j;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t s = 0; s < r; ++s)
      if (position[i] > position[s] && !c.matrix()(i, s).is_zero()) return false;
  return true;
}

/// Flag by descending degree, ties broken by frame index. Connection
/// matrices only map a summand into summands of strictly larger degree, so
/// this is stable; it is re-checked before returning.
inline FlagP1 complete_flag(const Conn0& c) {
  const auto& d = c.degrees();
  FlagP1 out;
  out.perm.resize(c.rank());
  std::iota(out.perm.begin(), out.perm.end(), 0);
  std::stable_sort(out.perm.begin(), out.perm.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  for (auto i : out.perm) out.graded_degrees.push_back(d[i]);
  if (!verify_flag(c, out)) throw InternalInvariantError("degree-ordered flag is not stable");
  return out;
}

/// Level-m objects reduce to their base; graded degrees are rescaled by p^m.
inline FlagP1 complete_flag(const DmBundle& m) {
  FlagP1 out = complete_flag(m.base);
  const std::int64_t scale = detail::power_sat(m.base.characteristic(), m.level);
  for (auto& d : out.graded_degrees) d *= scale;
  return out;
}

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_FLAG_HPP
