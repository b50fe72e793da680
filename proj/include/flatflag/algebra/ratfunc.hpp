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

#ifndef FLATFLAG_ALGEBRA_RATFUNC_HPP
#define FLATFLAG_ALGEBRA_RATFUNC_HPP

#include <limits>
#include <utility>

#include "flatflag/algebra/poly.hpp"

namespace flatflag {

/// Element of F_q(x) in canonical form: gcd(num, den) = 1 and den monic.
/// Canonical form is unique, so equality is structural.
class RatFunc {
 public:
  explicit RatFunc(const FieldPtr& f) : num_(f), den_(Poly::constant(f, f->one())) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(num_.one_like()) {}  // NOLINT(implicit)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  static RatFunc constant(const FieldPtr& f, Elem c) { return RatFunc(Poly::constant(f, c)); }
  static RatFunc x(const FieldPtr& f) { return RatFunc(Poly::x(f)); }
  /// x^n for any integer n.
  static RatFunc x_pow(const FieldPtr& f, int n) {
    if (n >= 0) return RatFunc(Poly::monomial(f, f->one(), static_cast<std::size_t>(n)));
    return RatFunc(Poly::constant(f, f->one()), Poly::monomial(f, f->one(), static_cast<std::size_t>(-n)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RatFunc zero_like() const { return RatFunc(field()); }
  RatFunc one_like() const { return constant(field(), field()->one()); }

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel first so the products stay small.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly n = (a.num_ / g1) * (b.num_ / g2);
    Poly d = (a.den_ / g2) * (b.den_ / g1);
    return RatFunc(std::move(n), std::move(d));
  }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc scaled(Elem s) const { return RatFunc(num_.scaled(s), den_); }

  RatFunc derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Substitution x -> x^n.
  RatFunc compose_pow(std::size_t n) const {
    return RatFunc(num_.compose_pow(n), den_.compose_pow(n));
  }

  /// Substitution x -> 1/x.
  RatFunc compose_inverse() const {
    const int shift = den_.degree() - num_.degree();
    RatFunc base(num_.reversed(), den_.reversed());
    return base * x_pow(field(), shift);
  }

  /// Order of vanishing at x = 0; poles give negative values. Zero maps to INT_MAX.
  int valuation() const {
    if (is_zero()) return std::numeric_limits<int>::max();
    return num_.valuation() - den_.valuation();
  }

  RatFunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = num_.one_like();
      return;
    }
    if (den_.degree() > 0) {
      const Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    const Elem inv_lead = num_.field()->inv(den_.lead());
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
  }

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline RatFunc zero_like(const RatFunc& f) { return f.zero_like(); }
inline RatFunc one_like(const RatFunc& f) { return f.one_like(); }
inline Poly zero_like(const Poly& f) { return f.zero_like(); }
inline Poly one_like(const Poly& f) { return f.one_like(); }

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_RATFUNC_HPP
