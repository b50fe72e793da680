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

#ifndef FLATFLAG_ELLIPTIC_CRITERIA_HPP
#define FLATFLAG_ELLIPTIC_CRITERIA_HPP

#include <map>
#include <tuple>

#include "flatflag/elliptic/atiyah.hpp"

namespace flatflag::elliptic {

using Bundle = std::vector<AtiyahAtom>;

inline std::string describe(const AtiyahAtom& a) {
  return "atom (r=" + std::to_string(a.r) + ", d=" + std::to_string(a.d) + ")";
}

namespace detail {

/// Index (1-based) of the first L_j whose degree p does not divide, or 0.
inline std::size_t first_bad_line(const AtiyahAtom& a, std::int64_t p) {
  const AtiyahProfile prof = atiyah_profile(a.r, a.d);
  for (std::size_t j = 0; j < prof.deg_l.size(); ++j)
    if (prof.deg_l[j] % p != 0) return j + 1;
  return 0;
}

inline void require_prime_like(std::int64_t p) {
  if (p < 2) throw PreconditionError("characteristic must be a prime, got " + std::to_string(p));
}

/// Classes are only comparable when every twist has the same length.
inline void require_consistent(const Bundle& b) {
  for (const auto& a : b)
    if (a.lam.size() != b.front().lam.size())
      throw PreconditionError("twist vectors of " + describe(b.front()) + " and " + describe(a) +
                              " have different lengths");
}

}  // namespace detail

/// An atom carries a connection iff p divides the degree of every L_j.
inline bool admits_connection(const AtiyahAtom& a, std::int64_t p) {
  detail::require_prime_like(p);
  return detail::first_bad_line(a, p) == 0;
}

inline bool admits_connection(const Bundle& b, std::int64_t p) {
  return std::all_of(b.begin(), b.end(), [p](const AtiyahAtom& a) { return admits_connection(a, p); });
}

/// Skeleton order: degree descending, then torsion-zero first, then torsion
/// lexicographic.
inline bool class_before(const PicClass& a, const PicClass& b) {
  return std::make_tuple(-a.degree, !is_zero_tor(a.tor), a.tor) < std::make_tuple(-b.degree, !is_zero_tor(b.tor), b.tor);
}

struct SkeletonEntry {
  PicClass cls;
  std::int64_t mult = 0;

  friend bool operator==(const SkeletonEntry&, const SkeletonEntry&) = default;
};

using FlagSkeleton = std::vector<SkeletonEntry>;

/// Multiset of graded line classes of any complete flag refining the
/// canonical filtrations of the atoms.
inline FlagSkeleton flag_skeleton(const Bundle& b, std::int64_t p) {
  detail::require_prime_like(p);
  detail::require_consistent(b);
  FlagSkeleton out;
  for (const auto& a : b) {
    if (const std::size_t j = detail::first_bad_line(a, p))
      throw PreconditionError(describe(a) + " has deg L_" + std::to_string(j) + " = " +
                              std::to_string(atiyah_profile(a.r, a.d).deg_l[j - 1]) + " not divisible by " +
                              std::to_string(p));
    const AtiyahProfile prof = atiyah_profile(a.r, a.d);
    const auto classes = line_classes(a);
    for (std::size_t j = 0; j < classes.size(); ++j) {
      auto it = std::find_if(out.begin(), out.end(), [&](const SkeletonEntry& e) { return e.cls == classes[j]; });
      if (it == out.end())
        out.push_back(SkeletonEntry{classes[j], prof.gr_ranks[j]});
      else
        it->mult += prof.gr_ranks[j];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SkeletonEntry& x, const SkeletonEntry& y) { return class_before(x.cls, y.cls); });
  return out;
}

enum class HomConstraint { PreservesFil1, ForcesZeroOnFil1, NoConstraint };

inline const char* to_string(HomConstraint h) {
  switch (h) {
    case HomConstraint::PreservesFil1:
      return "PreservesFil1";
    case HomConstraint::ForcesZeroOnFil1:
      return "ForcesZeroOnFil1";
    case HomConstraint::NoConstraint:
      return "NoConstraint";
  }
  return "";
}

/// What a morphism src -> dst must do to Fil^1 = L_1-part, read off from the
/// first line classes only.
inline HomConstraint hom_constraint(const AtiyahAtom& src, const AtiyahAtom& dst) {
  detail::require_consistent({src, dst});
  const PicClass a = line_classes(src).front();
  const PicClass b = line_classes(dst).front();
  if (a.degree > b.degree) return HomConstraint::ForcesZeroOnFil1;
  if (a == b) return HomConstraint::PreservesFil1;
  return HomConstraint::NoConstraint;
}

/// Distinct first line classes in peeling order.
inline std::vector<PicClass> peel_order(const Bundle& b) {
  detail::require_consistent(b);
  std::vector<PicClass> out;
  for (const auto& a : b) {
    PicClass c = line_classes(a).front();
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), class_before);
  return out;
}

}  // namespace flatflag::elliptic

#endif  // FLATFLAG_ELLIPTIC_CRITERIA_HPP
