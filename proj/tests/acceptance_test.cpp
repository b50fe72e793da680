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

// Acceptance gate: one line per criterion, "[PASS]" or "[FAIL]", with the
// measured time against its budget. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "flatflag/elliptic.hpp"
#include "flatflag/hitchin.hpp"
#include "flatflag/hitchin/sample.hpp"
#include "flatflag/pone.hpp"
#include "flatflag/pone/sample.hpp"
#include "oracles.hpp"

namespace {

using namespace flatflag;

/// Thrown by a criterion body to report the first mismatch.
struct Mismatch {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Mismatch{what};
}

std::size_t ipow(std::size_t p, unsigned e) {
  std::size_t out = 1;
  for (unsigned i = 0; i < e; ++i) out *= p;
  return out;
}

MatRF substitute(const MatRF& m, std::size_t q) {
  return m.map([q](const RatFunc& e) { return e.compose_pow(q); });
}

// ---------------------------------------------------------------------------

std::string level_equivalence() {
  std::size_t admissible = 0, total = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto f = Field::make(p);
    const std::int64_t bound = 2 * std::int64_t{p} * p;
    const std::int64_t width = 2 * bound + 1;
    for (std::size_t r = 1; r <= 4; ++r) {
      // Non-increasing tuples enumerate every multiset once.
      std::vector<std::int64_t> d(r, bound);
      for (;;) {
        for (unsigned m = 0; m <= 1; ++m) {
          ++total;
          const std::int64_t mod = static_cast<std::int64_t>(ipow(p, m + 1));
          bool divisible = true;
          for (auto x : d) divisible = divisible && (x % mod == 0);
          pone::BundleP1 b(d);
          require(pone::admits_level(b, p, m) == divisible, "admits_level disagrees with divisibility");
          if (divisible) {
            ++admissible;
            auto c = pone::canonical_connection(b, f, m);
            require(pone::validate(c.base).empty(), "canonical connection is not regular");
            require(pone::pm1_curvature(c).is_zero(), "canonical connection has curvature");
            require(c.degrees() == b.degrees(), "canonical connection has the wrong degrees");
          } else {
            bool threw = false;
            try {
              pone::canonical_connection(b, f, m);
            } catch (const PreconditionError&) {
              threw = true;
            }
            require(threw, "canonical_connection accepted an inadmissible bundle");
          }
        }
        // Next non-increasing tuple.
        std::size_t i = r;
        while (i > 0 && d[i - 1] == -bound) --i;
        if (i == 0) break;
        --d[i - 1];
        for (std::size_t j = i; j < r; ++j) d[j] = d[i - 1];
      }
      (void)width;
    }
  }
  return std::to_string(total) + " cases, " + std::to_string(admissible) + " admissible";
}

std::string projective_line_flags() {
  Sampler s(20260001);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 4));
    auto c = pone::sample_connection(s, f, pone::sample_degrees(s, r, p, 4 * p));
    require(oracle::entry_bounds_hold(p, c.degrees(), c.matrix()), "sampled connection is invalid");
    require(pone::validate(c).empty(), "validate rejects a valid connection");
    auto flag = pone::complete_flag(c);
    require(pone::verify_flag(c, flag), "flag not preserved");
    MatRF psi = zero_matrix(f, r);
    for (std::size_t j = 0; j < r; ++j) psi.set_column(j, oracle::nabla_power(c.matrix_rf(), basis_vector(f, r, j), p));
    require(psi == pone::p_curvature(c), "p-curvature differs from the direct iteration");
    require(matrix_pow(psi, static_cast<unsigned>(r)).is_zero(), "psi^r != 0");
  }
  return "500 connections";
}

std::string cartier_round_trip() {
  Sampler s(20260002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 4));
    auto c = pone::sample_flat_connection(s, f, pone::sample_degrees(s, r, p, 3 * p));
    require(pone::validate(c).empty(), "sampled flat connection is invalid");
    auto d = pone::cartier_descent(c);
    std::vector<std::int64_t> up;
    for (auto x : d.bundle.degrees()) up.push_back(x * p);
    auto can = pone::canonical_connection(pone::BundleP1(up), f, 0);
    require(can.base.degrees() == c.degrees(), "descended bundle pulls back to different degrees");
    require(gauge_transform(can.base.matrix_rf(), *inverse(d.frame)) == c.matrix_rf(), "round trip changed A");
  }
  return "100 round trips";
}

std::string pullback_substitution() {
  Sampler s(20260003);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 4));
    const unsigned m = static_cast<unsigned>(s.uniform(0, 1));
    const unsigned steps = static_cast<unsigned>(s.uniform(1, 2));
    pone::DmBundle d{m, pone::sample_connection(s, f, pone::sample_degrees(s, r, p, 4 * p))};
    MatRF psi = zero_matrix(f, r);
    for (std::size_t j = 0; j < r; ++j)
      psi.set_column(j, oracle::nabla_power(d.base.matrix_rf(), basis_vector(f, r, j), p));
    const MatRF lhs = pone::pm1_curvature(pone::frobenius_pullback(d, steps));
    const MatRF rhs = substitute(substitute(psi, ipow(p, m)), ipow(p, steps));
    require(lhs == rhs, "substitution law fails");
    require(lhs == substitute(psi, ipow(p, m + steps)), "single substitution differs");
  }
  return "100 pullbacks";
}

std::string atiyah_recursion() {
  for (std::int64_t r = 1; r <= 40; ++r)
    for (std::int64_t d = -60; d <= 60; ++d) {
      auto prof = elliptic::atiyah_profile(r, d);
      const std::int64_t h = std::gcd(r, d);
      std::int64_t rank = 0, deg = 0;
      for (std::size_t j = 0; j < prof.pairs.size(); ++j) {
        require(std::gcd(prof.pairs[j].first, prof.pairs[j].second) == h, "gcd changes");
        if (j > 0) require(prof.pairs[j].first < prof.pairs[j - 1].first, "rank does not decrease");
      }
      require(prof.pairs.back().second % prof.pairs.back().first == 0, "terminal rank does not divide degree");
      for (std::size_t j = 0; j < prof.l; ++j) {
        rank += prof.gr_ranks[j];
        deg += prof.gr_ranks[j] * prof.deg_l[j];
      }
      require(rank == r && deg == d, "conservation fails");
    }
  auto a = elliptic::atiyah_profile(5, 3);
  require(a.deg_l == std::vector<std::int64_t>{0, 1, 2} && a.m == 2, "(5,3) profile");
  auto b = elliptic::atiyah_profile(3, 2);
  require(b.deg_l == std::vector<std::int64_t>{0, 2} && b.m == 1, "(3,2) profile");
  return "4840 profiles";
}

std::string existence_criterion() {
  const elliptic::Tor lam{1};
  require(!elliptic::admits_connection(elliptic::AtiyahAtom{5, 3, lam}, 3), "(5,3), p=3");
  require(elliptic::admits_connection(elliptic::AtiyahAtom{3, 2, lam}, 2), "(3,2), p=2");
  for (std::int64_t r = 1; r <= 10; ++r)
    for (std::int64_t p : {2, 3, 5}) require(elliptic::admits_connection(elliptic::AtiyahAtom{r, 0, lam}, p), "(r,0)");
  Sampler s(20260006);
  int admissible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[trial % 3];
    elliptic::Bundle b;
    for (int i = 0, n = static_cast<int>(s.uniform(1, 3)); i < n; ++i)
      b.push_back({s.uniform(1, 8), s.uniform(-20, 20), {s.uniform(0, 3)}});
    const bool admits = elliptic::admits_connection(b, p);
    bool threw = false;
    try {
      elliptic::flag_skeleton(b, p);
    } catch (const PreconditionError&) {
      threw = true;
    }
    require(threw == !admits, "flag_skeleton error does not match admits_connection");
    admissible += admits;
  }
  return "examples + 1000 bundles (" + std::to_string(admissible) + " admissible)";
}

std::string charpoly_descent() {
  Sampler s(20260007);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    auto c = hitchin::sample_chart(s, f, static_cast<std::size_t>(s.uniform(1, 3)), 3, trial % 5 == 0);
    auto cp = hitchin::char_poly_psi(c);
    require(cp.descent_ok, "descent_ok false");
    for (const auto& a : cp.coeffs) {
      require(in_frobenius_subfield(a, 1), "coefficient outside F_q(x^p)");
      require(a.derivative().is_zero(), "coefficient has nonzero derivative");
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 3));
    auto c = hitchin::sample_chart(s, f, r, 2);
    const MatRF g = s.unimodular(f, r, 2, 3);
    hitchin::ChartConn moved(f, gauge_transform(c.matrix(), g));
    require(hitchin::char_poly_psi(moved).coeffs == hitchin::char_poly_psi(c).coeffs, "Char not gauge invariant");
  }
  return "300 charts + 50 gauges";
}

std::string dimension_count() {
  require(hitchin::hitchin_dims(2, 2) == hitchin::HitchinDims{5, 4, true}, "(2,2)");
  require(hitchin::hitchin_dims(2, 1) == hitchin::HitchinDims{2, 2, false}, "(2,1)");
  for (std::int64_t g = 2; g <= 30; ++g)
    for (std::int64_t r = 1; r <= 12; ++r) {
      auto d = hitchin::hitchin_dims(g, r);
      require(d.dim_b == g + (r * r - 1) * (g - 1) && d.dim_d == r * g, "formula");
      require(d.gamma_nondominant == (d.dim_b > d.dim_d), "strictness flag");
    }
  return "examples + grid";
}

hitchin::ChartConn certified_fixture() {
  auto f = Field::make(3);
  MatRF a = zero_matrix(f, 2);
  a(0, 1) = RatFunc::constant(f, f->one());
  a(1, 0) = RatFunc::x(f);
  return hitchin::ChartConn(f, a);
}

std::string no_flag_certificate() {
  auto f = Field::make(3);
  auto cert = hitchin::no_flag_certificate_rank2(certified_fixture());
  require(cert.verdict == hitchin::Verdict::Certified, "fixture not certified");
  const RatFunc x1 = RatFunc(Poly::from_ints(f, {1, 1}));
  require(cert.charpoly.coeffs[0] == -x1.pow(3) && cert.charpoly.coeffs[1].is_zero(), "Char != t^2 - (x+1)^3");
  auto root = oracle::quadratic_has_root_exhaustive(-cert.charpoly.coeffs[1], cert.charpoly.coeffs[0]);
  require(root.has_value() && !*root, "Char has a root in F_3(x)");
  Sampler s(20260009);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto fp = Field::make(p);
    auto c = pone::sample_connection(s, fp, pone::sample_degrees(s, 2, p, 6 * p), 0.9);
    hitchin::ChartConn chart(fp, c.matrix_rf());
    require(hitchin::p_curvature_chart(chart) == pone::p_curvature(c), "embedded psi differs");
    require(hitchin::no_flag_certificate_rank2(chart).verdict != hitchin::Verdict::Certified,
            "projective-line connection certified");
  }
  return "fixture + 200 embeddings";
}

std::string nilpotent_flags() {
  Sampler s(20260010);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(2, 3));
    auto c = hitchin::sample_nilpotent_chart(s, f, r, 1);
    auto out = hitchin::nilpotent_flag_chart(c);
    // G^{-1} (A G + G'), written independently of gauge_transform.
    const MatRF& g = out.gauge;
    const MatRF dg = g.map([](const RatFunc& e) { return e.derivative(); });
    const MatRF t = (*inverse(g)) * (c.matrix() * g + dg);
    require(t == out.transformed, "reported matrix differs from the gauge action");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j) require(t(i, j).is_zero(), "not upper triangular");
  }
  bool rejected = false;
  try {
    hitchin::nilpotent_flag_chart(certified_fixture());
  } catch (const PreconditionError&) {
    rejected = true;
  }
  require(rejected, "certified fixture accepted");
  return "100 inputs + rejection";
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 = no runtime bound
  std::function<std::string()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "level admissibility on P1 matches divisibility", 10, level_equivalence},
      {2, "complete flags and nilpotent p-curvature on P1", 60, projective_line_flags},
      {3, "Cartier descent round trip", 60, cartier_round_trip},
      {4, "p^{m+1}-curvature under Frobenius pullback", 0, pullback_substitution},
      {5, "Atiyah recursion invariants", 5, atiyah_recursion},
      {6, "connection existence on elliptic curves", 0, existence_criterion},
      {7, "char-poly coefficients descend, gauge invariance", 120, charpoly_descent},
      {8, "Hitchin dimension count", 0, dimension_count},
      {9, "rank-2 no-flag certificate", 0, no_flag_certificate},
      {10, "flags for nilpotent p-curvature", 0, nilpotent_flags},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Mismatch& m) {
      ok = false;
      detail = m.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << secs << "s";
    if (c.budget_s > 0) {
      timing << " / " << c.budget_s << "s";
      if (secs > c.budget_s) {
        ok = false;
        detail += " (over budget)";
      }
    }
    std::printf("[%s] criterion %2d: %s -- %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str(),
                timing.str().c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
