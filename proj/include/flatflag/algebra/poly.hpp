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

#ifndef FLATFLAG_ALGEBRA_POLY_HPP
#define FLATFLAG_ALGEBRA_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "flatflag/algebra/field.hpp"

namespace flatflag {

/// Univariate polynomial over F_q with ascending coefficients. The zero
/// polynomial has no stored coefficients and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}

  Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const FieldPtr& f, Elem c) { return Poly(f, {c}); }
  static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& cs) {
    std::vector<Elem> c;
    c.reserve(cs.size());
    for (auto v : cs) c.push_back(f->from_int(v));
    return Poly(f, std::move(c));
  }
  static Poly monomial(const FieldPtr& f, Elem c, std::size_t n) {
    std::vector<Elem> v(n + 1, f->zero());
    v[n] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(const FieldPtr& f) { return monomial(f, f->one(), 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  Elem lead() const { return c_.empty() ? field_->zero() : c_.back(); }

  Poly zero_like() const { return Poly(field_); }
  Poly one_like() const { return constant(field_, field_->one()); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = field_->neg(a);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    const Field& f = *a.field_;
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(Elem s) const {
    Poly r = *this;
    for (auto& a : r.c_) a = field_->mul(a, s);
    r.trim();
    return r;
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require_same_field(field_, d.field_);
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = *field_;
    Poly r = *this;
    if (r.degree() < d.degree()) return {zero_like(), r};
    std::vector<Elem> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), f.zero());
    const Elem inv_lead = f.inv(d.lead());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      const Elem coef = f.mul(r.lead(), inv_lead);
      q[shift] = coef;
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(coef, d.c_[i]));
      r.trim();
    }
    return {Poly(field_, std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero_like();
    std::vector<Elem> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())), c_[i]);
    return Poly(field_, std::move(out));
  }

  Elem eval(Elem t) const {
    Elem acc = field_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, t), *it);
    return acc;
  }

  /// Substitution x -> x^n.
  Poly compose_pow(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("compose_pow needs n >= 1");
    if (n == 1 || is_zero()) return *this;
    std::vector<Elem> out((c_.size() - 1) * n + 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * n] = c_[i];
    return Poly(field_, std::move(out));
  }

  /// Coefficients reversed with respect to degree: x^deg * f(1/x).
  Poly reversed() const {
    std::vector<Elem> out(c_.rbegin(), c_.rend());
    return Poly(field_, std::move(out));
  }

  /// x-adic valuation; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!field_->is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  Poly pow(unsigned e) const {
    Poly result = one_like();
    Poly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }

  FieldPtr field_;
  std::vector<Elem> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_POLY_HPP
