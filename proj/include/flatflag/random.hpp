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

#ifndef FLATFLAG_RANDOM_HPP
#define FLATFLAG_RANDOM_HPP

#include <cstdint>
#include <random>

#include "flatflag/algebra/matrix.hpp"

namespace flatflag {

/// Seeded generator for the randomized property suites. Wraps mt19937_64 so
/// that every suite is reproducible from a single --seed value.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p_true = 0.5) { return std::bernoulli_distribution(p_true)(rng_); }

  Elem elem(const Field& f) { return Elem{static_cast<std::uint32_t>(uniform(0, f.order() - 1))}; }
  Elem nonzero_elem(const Field& f) {
    return Elem{static_cast<std::uint32_t>(uniform(1, f.order() - 1))};
  }

  /// Polynomial of degree at most max_deg with uniform coefficients.
  Poly poly(const FieldPtr& f, int max_deg) {
    if (max_deg < 0) return Poly(f);
    std::vector<Elem> c;
    for (int i = 0; i <= max_deg; ++i) c.push_back(elem(*f));
    return Poly(f, std::move(c));
  }

  Poly nonzero_poly(const FieldPtr& f, int max_deg) {
    for (;;) {
      Poly p = poly(f, max_deg);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(const FieldPtr& f, int max_deg) {
    return RatFunc(poly(f, max_deg), nonzero_poly(f, max_deg));
  }

  MatRF poly_matrix(const FieldPtr& f, std::size_t n, int max_deg, double density = 1.0) {
    MatRF m = zero_matrix(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(density)) m(i, j) = RatFunc(poly(f, max_deg));
    return m;
  }

  /// Invertible polynomial matrix with constant determinant: a product of
  /// random elementary operations and a constant diagonal.
  MatRF unimodular(const FieldPtr& f, std::size_t n, int max_deg, int steps = 4) {
    MatRF g = identity_matrix(f, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = RatFunc::constant(f, nonzero_elem(*f));
    if (n < 2) return g;
    for (int s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 2));
      if (j >= i) ++j;
      MatRF e = identity_matrix(f, n);
      e(i, j) = RatFunc(poly(f, max_deg));
      g = g * e;
    }
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace flatflag

#endif  // FLATFLAG_RANDOM_HPP
