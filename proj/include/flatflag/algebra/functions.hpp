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

#ifndef FLATFLAG_ALGEBRA_FUNCTIONS_HPP
#define FLATFLAG_ALGEBRA_FUNCTIONS_HPP

#include <optional>
#include <vector>

#include "flatflag/algebra/ratfunc.hpp"

namespace flatflag {

/// find_irreducible_coeffs wrapped as a polynomial over the prime field.
inline Poly find_irreducible(std::uint32_t p, unsigned k) {
  const auto coeffs = find_irreducible_coeffs(p, k);
  const FieldPtr fp = Field::make(p);
  std::vector<Elem> c;
  for (auto v : coeffs) c.push_back(fp->from_int(v));
  return Poly(fp, std::move(c));
}

/// Square root of a polynomial, if one exists in F_q[x].
inline std::optional<Poly> sqrt_poly(const Poly& f) {
  if (f.is_zero()) return f;
  const Field& fld = *f.field();
  const auto lead_root = fld.sqrt(f.lead());
  if (!lead_root) return std::nullopt;
  const Poly m = f.monic();
  const int deg = m.degree();
  if (deg % 2 != 0) return std::nullopt;
  const std::size_t d = static_cast<std::size_t>(deg / 2);
  std::vector<Elem> s(d + 1, fld.zero());
  if (fld.characteristic() == 2) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(deg); ++i)
      if (i % 2 == 1 && !fld.is_zero(m.coeff(i))) return std::nullopt;
    for (std::size_t i = 0; i <= d; ++i) s[i] = fld.pth_root(m.coeff(2 * i));
  } else {
    // Match coefficients of S^2 from the top down; S is monic.
    s[d] = fld.one();
    const Elem inv_two = fld.inv(fld.from_int(2));
    for (std::size_t j = 1; j <= d; ++j) {
      const std::size_t target = 2 * d - j;
      Elem acc = m.coeff(target);
      for (std::size_t a = d - j + 1; a <= d; ++a) {
        const std::size_t b = target - a;
        if (b > d - j && b <= d) acc = fld.sub(acc, fld.mul(s[a], s[b]));
      }
      s[d - j] = fld.mul(acc, inv_two);
    }
  }
  Poly root(f.field(), std::move(s));
  if (!(root * root == m)) return std::nullopt;
  return root.scaled(*lead_root);
}

/// g with g^2 = f when f is a square in F_q(x). num and den are coprime, so f
/// is a square exactly when both are.
inline std::optional<RatFunc> sqrt_ratfunc(const RatFunc& f) {
  auto n = sqrt_poly(f.num());
  if (!n) return std::nullopt;
  auto d = sqrt_poly(f.den());
  if (!d) return std::nullopt;
  return RatFunc(*n, *d);
}

namespace detail {

/// Rewrites a polynomial in F_q[x^p] as one in x with p-th roots taken of the
/// coefficients, i.e. returns g with g^p = f.
inline Poly frobenius_untwist(const Poly& f) {
  const Field& fld = *f.field();
  const std::size_t p = fld.characteristic();
  std::vector<Elem> out;
  for (std::size_t i = 0; i * p < f.coeffs().size(); ++i) out.push_back(fld.pth_root(f.coeff(i * p)));
  return Poly(f.field(), std::move(out));
}

}  // namespace detail

/// Membership in F_q(x^{p^s}). A reduced fraction has zero derivative exactly
/// when numerator and denominator both lie in F_q[x^p].
inline bool in_frobenius_subfield(const RatFunc& f, unsigned s) {
  if (s < 1) throw PreconditionError("in_frobenius_subfield needs s >= 1");
  RatFunc cur = f;
  for (unsigned i = 0; i < s; ++i) {
    if (!cur.derivative().is_zero()) return false;
    if (cur.is_constant()) return true;
    cur = RatFunc(detail::frobenius_untwist(cur.num()), detail::frobenius_untwist(cur.den()));
  }
  return true;
}

/// All roots of f in F_q, with multiplicity, in increasing code order.
inline std::vector<Elem> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("roots_in_field of the zero polynomial");
  const Field& fld = *f.field();
  std::vector<Elem> roots;
  Poly cur = f;
  for (std::uint32_t c = 0; c < fld.order() && cur.degree() > 0; ++c) {
    const Elem e{c};
    const Poly lin(f.field(), {fld.neg(e), fld.one()});
    while (cur.degree() > 0 && fld.is_zero(cur.eval(e))) {
      roots.push_back(e);
      cur = cur / lin;
    }
  }
  return roots;
}

/// Components g_0..g_{p-1} with f(x) = sum_l x^l g_l(x^p), each returned as a
/// function of y = x^p.
inline std::vector<RatFunc> frobenius_components(const RatFunc& f) {
  const FieldPtr& fp = f.field();
  const Field& fld = *fp;
  const std::size_t p = fld.characteristic();
  // f = N D^{p-1} / D^p and D(x)^p = D^{[p]}(x^p) with D^{[p]} having coefficients d_i^p.
  const Poly& d = f.den();
  std::vector<Elem> dp;
  for (auto c : d.coeffs()) dp.push_back(fld.pow(c, static_cast<std::int64_t>(p)));
  const Poly den_y(fp, std::move(dp));
  const Poly numer = f.num() * d.pow(static_cast<unsigned>(p - 1));
  std::vector<RatFunc> out;
  out.reserve(p);
  for (std::size_t l = 0; l < p; ++l) {
    std::vector<Elem> c;
    for (std::size_t i = 0; i * p + l < numer.coeffs().size(); ++i) c.push_back(numer.coeff(i * p + l));
    out.emplace_back(Poly(fp, std::move(c)), den_y);
  }
  return out;
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_FUNCTIONS_HPP
