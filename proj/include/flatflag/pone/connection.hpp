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

#ifndef FLATFLAG_PONE_CONNECTION_HPP
#define FLATFLAG_PONE_CONNECTION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "flatflag/algebra/matrix.hpp"

namespace flatflag::pone {

/// Splitting type of a bundle O(d_1) + ... + O(d_r) on the projective line,
/// stored descending.
class BundleP1 {
 public:
  explicit BundleP1(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw PreconditionError("bundle must have positive rank");
    std::stable_sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }

  friend bool operator==(const BundleP1&, const BundleP1&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

namespace detail {

/// p^e, saturating at int64 max.
inline std::int64_t power_sat(std::int64_t p, unsigned e) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / p) return std::numeric_limits<std::int64_t>::max();
    out *= p;
  }
  return out;
}

}  // namespace detail

/// Connection d + A dx on O(d_1) + ... + O(d_r), written on the chart x != inf
/// in the frame e_i whose transition to the chart at infinity is x^{d_i}.
/// Degrees are kept in descending order so frame index i is summand i of the
/// sorted splitting type.
class Conn0 {
 public:
  Conn0(FieldPtr field, std::vector<std::int64_t> degrees, MatPoly a)
      : field_(std::move(field)), degrees_(std::move(degrees)), a_(std::move(a)) {
    if (degrees_.empty()) throw PreconditionError("connection must have positive rank");
    if (!std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>()))
      throw PreconditionError("connection degrees must be sorted descending");
    if (a_.rows() != degrees_.size() || a_.cols() != degrees_.size())
      throw PreconditionError("connection matrix size does not match rank");
    for (const auto& e : a_.data()) require_same_field(field_, e.field());
  }

  /// The trivial-matrix connection, i.e. the canonical one when p | d_i.
  static Conn0 zero(const FieldPtr& f, std::vector<std::int64_t> degrees) {
    const std::size_t r = degrees.size();
    return Conn0(f, std::move(degrees), MatPoly(r, r, Poly(f)));
  }

  const FieldPtr& field() const { return field_; }
  std::uint32_t characteristic() const { return field_->characteristic(); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  const MatPoly& matrix() const { return a_; }
  MatRF matrix_rf() const { return to_ratfunc(a_); }
  BundleP1 bundle() const { return BundleP1(degrees_); }

  friend bool operator==(const Conn0& a, const Conn0& b) {
    return a.field_->same_as(*b.field_) && a.degrees_ == b.degrees_ && a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  std::vector<std::int64_t> degrees_;
  MatPoly a_;
};

/// A level-m differential module, stored through the level-shift equivalence
/// as a level-0 connection on the m-th Frobenius twist (coordinate y with
/// y = x^{p^m}). The bundle it represents has degrees p^m * base degrees.
struct DmBundle {
  unsigned level = 0;
  Conn0 base;

  std::vector<std::int64_t> degrees() const {
    const std::int64_t scale = detail::power_sat(base.characteristic(), level);
    std::vector<std::int64_t> out;
    for (auto d : base.degrees()) out.push_back(d * scale);
    return out;
  }
};

/// True iff the bundle carries a level-m structure, i.e. p^{m+1} divides every
/// degree.
inline bool admits_level(const BundleP1& b, std::uint32_t p, unsigned m) {
  const std::int64_t mod = detail::power_sat(p, m + 1);
  return std::all_of(b.degrees().begin(), b.degrees().end(), [mod](std::int64_t d) { return d % mod == 0; });
}

/// The canonical level-m structure on F^{(m+1)*} of O(d_1/p^{m+1}) + ...,
/// represented by the zero connection on degrees d_i / p^m.
inline DmBundle canonical_connection(const BundleP1& b, const FieldPtr& f, unsigned m) {
  const std::int64_t p = f->characteristic();
  const std::int64_t mod = detail::power_sat(p, m + 1);
  const std::int64_t scale = detail::power_sat(p, m);
  std::vector<std::int64_t> base;
  for (auto d : b.degrees()) {
    if (d % mod != 0)
      throw PreconditionError("degree " + std::to_string(d) + " is not divisible by p^(m+1) = " +
                              std::to_string(mod));
    base.push_back(d / scale);
  }
  return DmBundle{m, Conn0::zero(f, std::move(base))};
}

/// Entry of the chart-at-infinity matrix with a pole at y = 0.
struct Violation {
  std::size_t row;
  std::size_t col;
  int pole_order;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Regularity at infinity. With G = diag(x^{d_i}) the matrix on the other
/// chart is -y^{-2} [diag(d_i / x) + G^{-1} A G] at x = 1/y; every entry with
/// a pole at y = 0 is reported. Empty output means c is a genuine connection.
inline std::vector<Violation> validate(const Conn0& c) {
  const FieldPtr& f = c.field();
  const auto& d = c.degrees();
  const std::size_t r = c.rank();
  std::vector<Violation> out;
  const RatFunc minus_y_inv_sq = -RatFunc::x_pow(f, -2);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      RatFunc entry = RatFunc(c.matrix()(j, i)) * RatFunc::x_pow(f, static_cast<int>(d[i] - d[j]));
      if (i == j) entry = entry + RatFunc::x_pow(f, -1).scaled(f->from_int(d[i]));
      if (entry.is_zero()) continue;
      const RatFunc at_inf = entry.compose_inverse() * minus_y_inv_sq;
      const int v = at_inf.valuation();
      if (v < 0) out.push_back(Violation{j, i, -v});
    }
  return out;
}

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_CONNECTION_HPP
