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

#ifndef FLATFLAG_ALGEBRA_FIELD_HPP
#define FLATFLAG_ALGEBRA_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatflag/error.hpp"

namespace flatflag {

/// An element of F_q, encoded as sum_i c_i p^i where c_0..c_{k-1} are its
/// residues in the power basis of the modulus root. Meaningless without the
/// owning Field.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Dense polynomial over F_p, ascending coefficients.
using RawPoly = std::vector<std::uint32_t>;

inline void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b.
inline RawPoly raw_rem(RawPoly a, const RawPoly& b, std::uint32_t p) {
  raw_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    raw_trim(a);
  }
  return a;
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  raw_trim(out);
  return out;
}

/// Monic polynomial x^deg + (lower coefficients given by the base-p digits of code).
inline RawPoly raw_monic_from_code(std::uint64_t code, unsigned deg, std::uint32_t p) {
  RawPoly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool raw_is_irreducible(const RawPoly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 0) return false;
  for (unsigned dg = 1; dg <= deg / 2; ++dg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      if (raw_rem(f, raw_monic_from_code(c, dg, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Lexicographically smallest monic irreducible polynomial of degree k over F_p,
/// comparing coefficients from the top degree down (equivalently, smallest
/// base-p code of the lower coefficients). For k = 1 this is x.
inline std::vector<std::uint32_t> find_irreducible_coeffs(std::uint32_t p, unsigned k) {
  if (!detail::is_prime(p))
    throw InvalidFieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidFieldError("extension degree must be at least 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= p;
    if (count > (std::uint64_t{1} << 40)) throw InvalidFieldError("extension too large");
  }
  for (std::uint64_t c = 0; c < count; ++c) {
    auto f = detail::raw_monic_from_code(c, k, p);
    if (detail::raw_is_irreducible(f, p)) return f;
  }
  throw InternalInvariantError("no irreducible polynomial found");  // unreachable
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^k} = F_p[z]/(modulus). Immutable after construction;
/// multiplication, inversion and square roots go through discrete log tables,
/// so the order is capped at kMaxOrder.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  static FieldPtr make(std::uint32_t p, unsigned k = 1) {
    return with_modulus(p, find_irreducible_coeffs(p, k));
  }

  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!detail::is_prime(p))
      throw InvalidFieldError("characteristic " + std::to_string(p) + " is not prime");
    for (auto c : modulus)
      if (c >= p) throw InvalidFieldError("modulus coefficient out of range");
    if (modulus.size() < 2 || modulus.back() != 1)
      throw InvalidFieldError("modulus must be monic of degree >= 1");
    if (!detail::raw_is_irreducible(modulus, p))
      throw InvalidFieldError("modulus is reducible over F_" + std::to_string(p));
    return FieldPtr(new Field(p, std::move(modulus)));
  }

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Ascending, monic, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  Elem element(std::uint32_t code) const {
    if (code >= q_) throw ParseError("field element code out of range");
    return Elem{code};
  }

  Elem from_int(std::int64_t n) const {
    const std::int64_t p = p_;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
  }

  Elem from_residues(std::span<const std::uint32_t> res) const {
    if (res.size() > k_) throw ParseError("too many residues for field element");
    std::uint32_t code = 0;
    std::uint32_t scale = 1;
    for (auto r : res) {
      if (r >= p_) throw ParseError("residue out of range");
      code += r * scale;
      scale *= p_;
    }
    return Elem{code};
  }

  std::vector<std::uint32_t> residues(Elem a) const {
    std::vector<std::uint32_t> out(k_);
    std::uint32_t c = a.code;
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = c % p_;
      c /= p_;
    }
    return out;
  }

  bool is_zero(Elem a) const { return a.code == 0; }

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
    std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return Elem{out};
  }

  Elem neg(Elem a) const {
    if (k_ == 1) return Elem{a.code == 0 ? 0 : p_ - a.code};
    std::uint32_t x = a.code, out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    return Elem{out};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return Elem{exp_[log_[a.code] + log_[b.code]]};
  }

  Elem inv(Elem a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero in F_q");
    return Elem{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::int64_t e) const {
    if (a.code == 0) {
      if (e < 0) throw std::domain_error("negative power of zero in F_q");
      return e == 0 ? one() : zero();
    }
    const std::int64_t n = q_ - 1;
    const std::int64_t l = (static_cast<std::int64_t>(log_[a.code]) * (((e % n) + n) % n)) % n;
    return Elem{exp_[static_cast<std::size_t>(l)]};
  }

  /// Inverse of the Frobenius a -> a^p.
  Elem pth_root(Elem a) const {
    if (a.code == 0 || k_ == 1) return a;
    std::uint64_t e = 1;
    for (unsigned i = 1; i < k_; ++i) e = (e * p_) % (q_ - 1);
    return pow(a, static_cast<std::int64_t>(e));
  }

  bool is_square(Elem a) const {
    if (a.code == 0 || p_ == 2) return true;
    return log_[a.code] % 2 == 0;
  }

  std::optional<Elem> sqrt(Elem a) const {
    if (a.code == 0) return a;
    if (p_ == 2) return pth_root(a);
    if (log_[a.code] % 2 != 0) return std::nullopt;
    return Elem{exp_[log_[a.code] / 2]};
  }

  /// A generator of the multiplicative group.
  Elem primitive() const { return Elem{exp_[1 % (q_ - 1)]}; }

  bool same_as(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      q *= p_;
      if (q > kMaxOrder)
        throw InvalidFieldError("field order exceeds " + std::to_string(kMaxOrder));
    }
    q_ = static_cast<std::uint32_t>(q);
    build_tables();
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    auto ra = residues(Elem{a});
    auto rb = residues(Elem{b});
    detail::raw_trim(ra);
    detail::raw_trim(rb);
    auto prod = detail::raw_rem(detail::raw_mul(ra, rb, p_), modulus_, p_);
    std::uint32_t code = 0, scale = 1;
    for (auto c : prod) {
      code += c * scale;
      scale *= p_;
    }
    return code;
  }

  void build_tables() {
    const std::uint32_t n = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    for (std::uint32_t g = 1; g < q_; ++g) {
      std::uint32_t cur = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i > 0 && cur == 1) {
          primitive = false;
          break;
        }
        exp_[i] = cur;
        cur = slow_mul(cur, g);
      }
      if (!primitive || cur != 1) continue;
      for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i + n] = exp_[i];
        log_[exp_[i]] = i;
      }
      return;
    }
    throw InternalInvariantError("no primitive element found");
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() != b.get() && !(a && b && a->same_as(*b)))
    throw PreconditionError("operands live over different fields");
}

}  // namespace flatflag

#endif  // FLATFLAG_ALGEBRA_FIELD_HPP
