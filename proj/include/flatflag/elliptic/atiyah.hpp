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

#ifndef FLATFLAG_ELLIPTIC_ATIYAH_HPP
#define FLATFLAG_ELLIPTIC_ATIYAH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "flatflag/error.hpp"

namespace flatflag::elliptic {

using Tor = std::vector<std::int64_t>;

/// Finite abelian group Z/n_1 + ... + Z/n_t standing in for the degree-0
/// class group. The marked point is the zero class.
class Pic0Group {
 public:
  explicit Pic0Group(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    for (auto n : factors_)
      if (n < 1) throw PreconditionError("invariant factors must be >= 1, got " + std::to_string(n));
  }

  const std::vector<std::int64_t>& factors() const { return factors_; }

  /// Components reduced into [0, n_i).
  Tor reduce(const Tor& t) const {
    if (t.size() != factors_.size())
      throw PreconditionError("torsion vector has " + std::to_string(t.size()) + " components, group has " +
                              std::to_string(factors_.size()));
    Tor out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = ((t[i] % factors_[i]) + factors_[i]) % factors_[i];
    return out;
  }

  Tor zero() const { return Tor(factors_.size(), 0); }

 private:
  std::vector<std::int64_t> factors_;
};

inline bool is_zero_tor(const Tor& t) {
  return std::all_of(t.begin(), t.end(), [](std::int64_t v) { return v == 0; });
}

/// Line bundle class: degree plus a degree-0 twist. O(c * sigma) is (c, 0).
struct PicClass {
  std::int64_t degree = 0;
  Tor tor;

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Indecomposable bundle of rank r and degree d; lam is the degree-0 part of
/// its terminal line class.
struct AtiyahAtom {
  std::int64_t r = 1;
  std::int64_t d = 0;
  Tor lam;

  friend bool operator==(const AtiyahAtom&, const AtiyahAtom&) = default;
};

/// Atom with lam reduced in the given group.
inline AtiyahAtom reduced(const AtiyahAtom& a, const Pic0Group& g) { return AtiyahAtom{a.r, a.d, g.reduce(a.lam)}; }

struct AtiyahProfile {
  /// (r_j, d_j) for j = 0..m.
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  /// deg L_1, ..., deg L_l.
  std::vector<std::int64_t> deg_l;
  std::size_t m = 0;
  std::size_t l = 0;
  std::int64_t h = 0;
  /// Ranks of the graded pieces of the canonical filtration, one per L_j.
  std::vector<std::int64_t> gr_ranks;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Canonical filtration data of the indecomposable bundle of rank r and
/// degree d: peel L_j = O(floor(d_{j-1} / r_{j-1}) sigma) until r_m | d_m.
inline AtiyahProfile atiyah_profile(std::int64_t r, std::int64_t d) {
  if (r < 1) throw PreconditionError("rank must be >= 1, got " + std::to_string(r));
  AtiyahProfile out;
  out.h = std::gcd(r, d);
  out.pairs.emplace_back(r, d);
  for (;;) {
    auto [rj, dj] = out.pairs.back();
    if (dj % rj == 0) break;
    const std::int64_t q = detail::floor_div(dj, rj);
    const std::int64_t rem = dj - rj * q;  // in (0, rj)
    out.deg_l.push_back(q);
    out.gr_ranks.push_back(rem);
    out.pairs.emplace_back(rj - rem, dj - q * rem);
  }
  out.m = out.pairs.size() - 1;
  const auto [rm, dm] = out.pairs.back();
  out.l = out.m + static_cast<std::size_t>(rm);
  for (std::int64_t i = 0; i < rm; ++i) {
    out.deg_l.push_back(dm / rm);
    out.gr_ranks.push_back(1);
  }
  return out;
}

/// The classes L_1, ..., L_l. Those before the terminal stage are multiples of
/// the marked point; the tail carries the atom's twist.
inline std::vector<PicClass> line_classes(const AtiyahAtom& a) {
  const AtiyahProfile prof = atiyah_profile(a.r, a.d);
  std::vector<PicClass> out;
  for (std::size_t j = 0; j < prof.l; ++j) {
    if (j < prof.m)
      out.push_back(PicClass{prof.deg_l[j], Tor(a.lam.size(), 0)});
    else
      out.push_back(PicClass{prof.deg_l[j], a.lam});
  }
  return out;
}

}  // namespace flatflag::elliptic

#endif  // FLATFLAG_ELLIPTIC_ATIYAH_HPP
