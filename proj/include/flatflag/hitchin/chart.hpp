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

#ifndef FLATFLAG_HITCHIN_CHART_HPP
#define FLATFLAG_HITCHIN_CHART_HPP

#include "flatflag/algebra/charpoly.hpp"
#include "flatflag/algebra/differential.hpp"
#include "flatflag/algebra/functions.hpp"

namespace flatflag::hitchin {

/// d + A dx on a trivialized affine chart of some curve. No global
/// condition is imposed on A.
class ChartConn {
 public:
  ChartConn(FieldPtr field, MatRF a) : field_(std::move(field)), a_(std::move(a)) {
    if (!a_.square() || a_.rows() == 0) throw PreconditionError("connection matrix must be square and nonempty");
    for (const auto& e : a_.data()) require_same_field(field_, e.field());
  }

  const FieldPtr& field() const { return field_; }
  std::size_t rank() const { return a_.rows(); }
  const MatRF& matrix() const { return a_; }

  friend bool operator==(const ChartConn& a, const ChartConn& b) {
    return a.field_->same_as(*b.field_) && a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  MatRF a_;
};

/// p-curvature on the chart. Before returning, T^p(g v) = g psi(v) is checked
/// for a fixed section g v with nonconstant g.
inline MatRF p_curvature_chart(const ChartConn& c) {
  const MatRF psi = p_curvature_matrix(c.matrix());
  const FieldPtr& f = c.field();
  const std::size_t r = c.rank();
  const unsigned p = f->characteristic();
  // g = (x + 1) / (x^2 + x + 2), v = (1, x, x^2, ...).
  const RatFunc g(Poly::from_ints(f, {1, 1}), Poly::from_ints(f, {2, 1, 1}));
  VecRF v, gv;
  for (std::size_t i = 0; i < r; ++i) {
    v.push_back(RatFunc::x_pow(f, static_cast<int>(i)));
    gv.push_back(g * v.back());
  }
  for (unsigned step = 0; step < p; ++step) gv = apply_nabla(c.matrix(), gv);
  const VecRF expect = psi.apply(v);
  for (std::size_t i = 0; i < r; ++i)
    if (gv[i] != g * expect[i]) throw InternalInvariantError("p-curvature failed the linearity check");
  return psi;
}

/// det(t - psi) = t^r + a_{r-1} t^{r-1} + ... + a_0.
struct CharPolyP {
  /// a_0, ..., a_{r-1}; the leading 1 is implicit.
  std::vector<RatFunc> coeffs;
  /// Every a_i lies in F_q(x^p).
  bool descent_ok = false;

  /// All r + 1 coefficients, ascending, including the leading 1.
  std::vector<RatFunc> full() const {
    std::vector<RatFunc> out = coeffs;
    out.push_back(one_like(coeffs.front()));
    return out;
  }
};

inline CharPolyP char_poly_psi(const ChartConn& c) {
  auto all = charpoly_berkowitz(p_curvature_chart(c));
  all.pop_back();
  CharPolyP out{std::move(all), true};
  for (const auto& a : out.coeffs)
    if (!in_frobenius_subfield(a, 1)) out.descent_ok = false;
  return out;
}

struct HitchinDims {
  std::int64_t dim_b;
  std::int64_t dim_d;
  bool gamma_nondominant;

  friend bool operator==(const HitchinDims&, const HitchinDims&) = default;
};

/// dim of the Hitchin base g + (r^2 - 1)(g - 1) against r g for the image of
/// the twisted rank-1 data.
inline HitchinDims hitchin_dims(std::int64_t g, std::int64_t r) {
  if (g < 2) throw PreconditionError("hitchin_dims needs genus >= 2, got " + std::to_string(g));
  if (r < 1) throw PreconditionError("hitchin_dims needs rank >= 1, got " + std::to_string(r));
  const std::int64_t base = g + (r * r - 1) * (g - 1);
  const std::int64_t d = r * g;
  return HitchinDims{base, d, base > d};
}

}  // namespace flatflag::hitchin

#endif  // FLATFLAG_HITCHIN_CHART_HPP
