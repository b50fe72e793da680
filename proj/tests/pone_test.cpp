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

#include <gtest/gtest.h>

#include "flatflag/pone.hpp"
#include "flatflag/pone/sample.hpp"
#include "oracles.hpp"

namespace {

using namespace flatflag;
using namespace flatflag::pone;

Poly P(const FieldPtr& f, std::vector<std::int64_t> c) { return Poly::from_ints(f, c); }

MatPoly mat(const FieldPtr& f, std::vector<std::vector<std::vector<std::int64_t>>> rows) {
  const std::size_t n = rows.size();
  MatPoly m(n, n, Poly(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = P(f, rows[i][j]);
  return m;
}

/// (2,0), p=2, A = [[0, 1],[0, 0]].
Conn0 c_example_2() {
  auto f = Field::make(2);
  return Conn0(f, {2, 0}, mat(f, {{{}, {1}}, {{}, {}}}));
}

/// (4,0), p=2, A = [[0, 1 + x + x^2],[0, 0]].
Conn0 c_example_4() {
  auto f = Field::make(2);
  return Conn0(f, {4, 0}, mat(f, {{{}, {1, 1, 1}}, {{}, {}}}));
}

// ---------------------------------------------------------------------------
// Levels and canonical structures

TEST(Level, AdmitsLevelExamples) {
  EXPECT_TRUE(admits_level(BundleP1({6, 3, 0}), 3, 0));
  EXPECT_FALSE(admits_level(BundleP1({6, 3, 0}), 3, 1));
  EXPECT_TRUE(admits_level(BundleP1({0, 0}), 5, 3));
  EXPECT_FALSE(admits_level(BundleP1({2, 0}), 3, 0));
  EXPECT_TRUE(admits_level(BundleP1({-8, 4}), 2, 1));
}

TEST(Level, BundleSortsDescending) {
  EXPECT_EQ(BundleP1({0, 4, 2}).degrees(), (std::vector<std::int64_t>{4, 2, 0}));
  EXPECT_THROW(BundleP1({}), PreconditionError);
}

TEST(Level, CanonicalConnectionExamples) {
  auto f2 = Field::make(2);
  auto c = canonical_connection(BundleP1({4, 2}), f2, 0);
  EXPECT_EQ(c.level, 0u);
  EXPECT_EQ(c.base.degrees(), (std::vector<std::int64_t>{4, 2}));
  EXPECT_TRUE(c.base.matrix().is_zero());

  auto c1 = canonical_connection(BundleP1({4, 0}), f2, 1);
  EXPECT_EQ(c1.base.degrees(), (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(c1.degrees(), (std::vector<std::int64_t>{4, 0}));

  try {
    canonical_connection(BundleP1({2, 0}), Field::make(3), 0);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("degree 2"), std::string::npos);
  }
}

TEST(Level, AdmissibilityMatchesCanonicalAndCurvature) {
  Sampler s(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = s.coin() ? 2 : 3;
    const unsigned m = static_cast<unsigned>(s.uniform(0, 1));
    auto f = Field::make(p);
    std::vector<std::int64_t> d;
    for (int i = 0, r = static_cast<int>(s.uniform(1, 4)); i < r; ++i)
      d.push_back(s.uniform(-2 * std::int64_t{p} * p, 2 * std::int64_t{p} * p));
    BundleP1 b(d);
    if (admits_level(b, p, m)) {
      auto c = canonical_connection(b, f, m);
      EXPECT_TRUE(pm1_curvature(c).is_zero());
      EXPECT_TRUE(validate(c.base).empty());
      EXPECT_EQ(c.degrees(), b.degrees());
    } else {
      EXPECT_THROW(canonical_connection(b, f, m), PreconditionError);
    }
  }
}

// ---------------------------------------------------------------------------
// Validation

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(c_example_2()).empty());
  auto f = Field::make(2);
  auto v = validate(Conn0(f, {2, 0}, mat(f, {{{}, {}}, {{1}, {}}})));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{1, 0, 4}));
  EXPECT_TRUE(validate(Conn0::zero(Field::make(3), {9, 3, -6})).empty());
}

TEST(Validate, DiagonalDegreesMustBeDivisible) {
  auto f = Field::make(3);
  auto v = validate(Conn0::zero(f, {2, 0}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Violation{0, 0, 1}));
}

TEST(Validate, AgreesWithEntryBoundsOn500Matrices) {
  Sampler s(2024);
  int valid = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[s.uniform(0, 2)];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 4));
    const std::int64_t step = s.coin(0.8) ? p : 1;
    Conn0 base = sample_connection(s, f, sample_degrees(s, r, step, 3 * p));
    MatPoly a = base.matrix();
    // Perturb a few entries, sometimes just past the admissible degree.
    for (int k = static_cast<int>(s.uniform(0, 2)); k > 0; --k) {
      const auto j = static_cast<std::size_t>(s.uniform(0, r - 1));
      const auto i = static_cast<std::size_t>(s.uniform(0, r - 1));
      const std::int64_t bound = base.degrees()[j] - base.degrees()[i] - 2;
      a(j, i) = s.poly(f, static_cast<int>(std::clamp<std::int64_t>(bound + s.uniform(-1, 1), -1, 8)));
    }
    Conn0 c(f, base.degrees(), a);
    const bool oracle = oracle::entry_bounds_hold(p, c.degrees(), c.matrix());
    EXPECT_EQ(validate(c).empty(), oracle) << "trial " << trial;
    valid += oracle;
  }
  // Both outcomes must be exercised.
  EXPECT_GT(valid, 100);
  EXPECT_LT(valid, 450);
}

// ---------------------------------------------------------------------------
// Curvature

TEST(Curvature, Examples) {
  EXPECT_TRUE(p_curvature(Conn0::zero(Field::make(5), {10, 5, 0})).is_zero());
  EXPECT_TRUE(p_curvature(c_example_2()).is_zero());
  auto psi = p_curvature(c_example_4());
  auto f = Field::make(2);
  MatRF want = zero_matrix(f, 2);
  want(0, 1) = RatFunc::constant(f, f->one());
  EXPECT_EQ(psi, want);
}

TEST(Curvature, MatchesScalarFormulaInRankOne) {
  Sampler s(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = Field::make(p);
    for (int trial = 0; trial < 20; ++trial) {
      const RatFunc a = s.ratfunc(f, 3);
      MatRF m(1, 1, a);
      EXPECT_EQ(p_curvature_matrix(m)(0, 0), oracle::scalar_p_curvature(a));
    }
  }
}

TEST(Curvature, IsLinearOverFunctions) {
  Sampler s(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    auto f = Field::make(p);
    Conn0 c = sample_connection(s, f, sample_degrees(s, 3, p, 3 * p));
    const MatRF a = c.matrix_rf();
    std::vector<RatFunc> v;
    for (int i = 0; i < 3; ++i) v.push_back(s.ratfunc(f, 2));
    const RatFunc g = s.ratfunc(f, 2);
    std::vector<RatFunc> gv;
    for (const auto& e : v) gv.push_back(g * e);
    auto lhs = oracle::nabla_power(a, gv, p);
    auto rhs = oracle::nabla_power(a, v, p);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(lhs[i], g * rhs[i]);
    EXPECT_EQ(p_curvature(c).apply(v), rhs);
  }
}

TEST(Curvature, StrictlyUpperTriangularAndNilpotent) {
  Sampler s(99);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 4));
    Conn0 c = sample_connection(s, f, sample_degrees(s, r, p, 4 * p));
    ASSERT_TRUE(validate(c).empty());
    auto psi = p_curvature(c);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i <= j; ++i) EXPECT_TRUE(psi(j, i).is_zero());
    EXPECT_TRUE(is_nilpotent(psi));
  }
}

TEST(Curvature, HigherLevelExamples) {
  auto f = Field::make(2);
  DmBundle d{1, c_example_4()};
  EXPECT_EQ(pm1_curvature(d), p_curvature(c_example_4()));  // constant entry, unchanged
  EXPECT_TRUE(pm1_curvature(canonical_connection(BundleP1({8, 4}), f, 1)).is_zero());

  // Base psi with an x^2 entry: A = [[0, x^4], [0, 0]] on (6, 0).
  Conn0 base(f, {6, 0}, mat(f, {{{}, {0, 0, 0, 1}}, {{}, {}}}));
  ASSERT_TRUE(validate(base).empty());
  auto psi = p_curvature(base);
  EXPECT_EQ(psi(0, 1), RatFunc::x_pow(f, 2));
  EXPECT_EQ(pm1_curvature(DmBundle{1, base})(0, 1), RatFunc::x_pow(f, 4));
}

TEST(Curvature, PullbackExamples) {
  auto f = Field::make(2);
  auto d = frobenius_pullback(DmBundle{0, c_example_2()}, 1);
  EXPECT_EQ(d.level, 1u);
  EXPECT_EQ(d.degrees(), (std::vector<std::int64_t>{4, 0}));
  auto can = canonical_connection(BundleP1({4, 0}), f, 0);
  auto can2 = frobenius_pullback(can, 2);
  EXPECT_EQ(can2.level, 2u);
  EXPECT_TRUE(pm1_curvature(can2).is_zero());
  EXPECT_THROW(frobenius_pullback(can, 0), PreconditionError);
}

TEST(Curvature, PullbackSubstitutionLaw) {
  Sampler s(404);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    auto f = Field::make(p);
    const unsigned m = static_cast<unsigned>(s.uniform(0, 1));
    const unsigned steps = static_cast<unsigned>(s.uniform(1, 2));
    DmBundle d{m, sample_connection(s, f, sample_degrees(s, 3, p, 4 * p))};
    // Independent route: hand-rolled T^p, then one substitution x -> x^{p^{m+s}}.
    MatRF psi = zero_matrix(f, 3);
    for (std::size_t j = 0; j < 3; ++j) psi.set_column(j, oracle::nabla_power(d.base.matrix_rf(), basis_vector(f, 3, j), p));
    std::size_t q = 1;
    for (unsigned i = 0; i < m + steps; ++i) q *= p;
    const MatRF lhs = psi.map([q](const RatFunc& e) { return e.compose_pow(q); });
    EXPECT_EQ(pm1_curvature(frobenius_pullback(d, steps)), lhs);
    std::size_t qs = 1;
    for (unsigned i = 0; i < steps; ++i) qs *= p;
    EXPECT_EQ(pm1_curvature(d).map([qs](const RatFunc& e) { return e.compose_pow(qs); }), lhs);
  }
}

// ---------------------------------------------------------------------------
// Tensor and dual

TEST(Tensor, Examples) {
  auto f = Field::make(2);
  auto t = tensor(Conn0::zero(f, {2, 0}), Conn0::zero(f, {4}));
  EXPECT_EQ(t.conn, Conn0::zero(f, {6, 4}));
  auto dl = dual(Conn0::zero(f, {2}));
  EXPECT_EQ(dl.conn, Conn0::zero(f, {-2}));

  auto c = c_example_2();
  auto cd = tensor(c, dual(c).conn);
  EXPECT_EQ(cd.conn.degrees(), (std::vector<std::int64_t>{2, 0, 0, -2}));
  EXPECT_TRUE(validate(cd.conn).empty());
}

TEST(Tensor, OutputsValidAndDualIsInvolution) {
  Sampler s(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    auto f = Field::make(p);
    Conn0 a = sample_connection(s, f, sample_degrees(s, static_cast<std::size_t>(s.uniform(1, 3)), p, 3 * p));
    Conn0 b = sample_connection(s, f, sample_degrees(s, static_cast<std::size_t>(s.uniform(1, 2)), p, 3 * p));
    auto t = tensor(a, b);
    EXPECT_TRUE(validate(t.conn).empty());
    auto d1 = dual(a);
    EXPECT_TRUE(validate(d1.conn).empty());
    auto d2 = dual(d1.conn);
    // Compose the two recorded permutations back to the original frame.
    std::vector<std::size_t> total;
    for (auto i : d2.perm) total.push_back(d1.perm[i]);
    EXPECT_EQ(a.matrix().permuted(total), d2.conn.matrix());
    EXPECT_EQ(d2.conn.degrees(), a.degrees());
  }
}

TEST(Tensor, CurvatureIsAdditive) {
  // psi(a (x) b) = psi(a) (x) 1 + 1 (x) psi(b), checked through the permutation.
  Sampler s(8);
  auto f = Field::make(2);
  for (int trial = 0; trial < 20; ++trial) {
    Conn0 a = sample_connection(s, f, sample_degrees(s, 2, 2, 8));
    Conn0 b = sample_connection(s, f, sample_degrees(s, 2, 2, 8));
    auto t = tensor(a, b);
    const MatRF one = identity_matrix(f, 2);
    const MatRF expect = (kron(p_curvature(a), one) + kron(one, p_curvature(b))).permuted(t.perm);
    EXPECT_EQ(p_curvature(t.conn), expect);
  }
}

// ---------------------------------------------------------------------------
// Cartier descent

TEST(Descent, Examples) {
  auto f = Field::make(2);
  auto d = cartier_descent(Conn0::zero(f, {4, 2}));
  EXPECT_EQ(d.bundle.degrees(), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(d.frame, identity_matrix(f, 2));

  auto d2 = cartier_descent(c_example_2());
  EXPECT_EQ(d2.bundle.degrees(), (std::vector<std::int64_t>{1, 0}));
  MatRF want = identity_matrix(f, 2);
  want(0, 1) = RatFunc::x(f);
  EXPECT_EQ(d2.frame, want);

  EXPECT_THROW(cartier_descent(c_example_4()), PreconditionError);
}

TEST(Descent, RoundTripReproducesMatrix) {
  Sampler s(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    const auto r = static_cast<std::size_t>(s.uniform(1, 3));
    Conn0 c = sample_flat_connection(s, f, sample_degrees(s, r, p, 2 * p));
    ASSERT_TRUE(validate(c).empty());
    ASSERT_TRUE(p_curvature(c).is_zero());
    auto d = cartier_descent(c);
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& e : oracle::nabla_power(c.matrix_rf(), d.frame.column(i), 1)) EXPECT_TRUE(e.is_zero());
    // Pull back the canonical structure and move it by the frame.
    std::vector<std::int64_t> up;
    for (auto x : d.bundle.degrees()) up.push_back(x * p);
    auto can = canonical_connection(BundleP1(up), f, 0);
    EXPECT_EQ(gauge_transform(can.base.matrix_rf(), *inverse(d.frame)), c.matrix_rf());
  }
}

// ---------------------------------------------------------------------------
// Flags

TEST(Flag, Examples) {
  auto f = Field::make(3);
  auto can = Conn0::zero(f, {6, 3, 3});
  EXPECT_EQ(complete_flag(can).perm, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(verify_flag(can, FlagP1{{0, 2, 1}, {}}));

  auto c2 = c_example_2();
  EXPECT_EQ(complete_flag(c2).perm, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(verify_flag(c2, FlagP1{{1, 0}, {}}));
  EXPECT_EQ(complete_flag(c_example_4()).perm, (std::vector<std::size_t>{0, 1}));

  auto lifted = complete_flag(DmBundle{2, c2});
  EXPECT_EQ(lifted.graded_degrees, (std::vector<std::int64_t>{8, 0}));
}

TEST(Flag, RejectsMalformedPermutations) {
  auto c = Conn0::zero(Field::make(2), {2, 0});
  EXPECT_FALSE(verify_flag(c, FlagP1{{0}, {}}));
  EXPECT_FALSE(verify_flag(c, FlagP1{{0, 0}, {}}));
  EXPECT_FALSE(verify_flag(c, FlagP1{{0, 2}, {}}));
}

TEST(Flag, RandomConnectionsCarryFlags) {
  Sampler s(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
    auto f = Field::make(p);
    Conn0 c = sample_connection(s, f, sample_degrees(s, static_cast<std::size_t>(s.uniform(1, 4)), p, 4 * p));
    EXPECT_TRUE(verify_flag(c, complete_flag(c)));
  }
}

}  // namespace
