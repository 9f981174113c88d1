// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "drsubmax/lp_simplex.h"

#include <cmath>

#include "drsubmax/rng.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace drsubmax {
namespace {

LinearProgram RandomLp(Rng& rng, std::size_t m, std::size_t n) {
  LinearProgram lp;
  lp.a = Matrix(m, n);
  lp.b = Vec(m);
  lp.c = Vec(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.a(i, j) = rng.Uniform(-1.0, 1.0);
    lp.b[i] = rng.Uniform(-0.3, 1.0);
  }
  for (std::size_t j = 0; j < n; ++j) lp.c[j] = rng.Uniform(-1.0, 1.0);
  return lp;
}

bool Feasible(const LinearProgram& lp, const Vec& x, double tol) {
  if (!InUnitBox(x, tol)) return false;
  const Vec ax = lp.a * x;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] > lp.b[i] + tol) return false;
  }
  return true;
}

TEST(LpSimplexTest, SumConstraint) {
  LinearProgram lp{Matrix{{1.0, 1.0}}, Vec{1.0}, Vec{1.0, 1.0}, {}};
  const LpSolution s = SolveLp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
}

TEST(LpSimplexTest, LowerBoundConstraintBindsOnOtherCoordinate) {
  LinearProgram lp{Matrix{{-1.0, -1.0}}, Vec{-0.1}, Vec{-1.0, 0.0}, {}};
  const LpSolution s = SolveLp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective, 0.0, 1e-12);
  EXPECT_NEAR(s.x[0], 0.0, 1e-12);
  EXPECT_GE(s.x[1], 0.1 - 1e-12);
}

TEST(LpSimplexTest, InfeasibleReportedByStatus) {
  // x1 + x2 >= 3 cannot hold in the unit box.
  LinearProgram lp{Matrix{{-1.0, -1.0}}, Vec{-3.0}, Vec{1.0, 1.0}, {}};
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kInfeasible);
}

TEST(LpSimplexTest, NoConstraintsPicksBoxCorner) {
  LinearProgram lp{Matrix(0, 3), Vec(), Vec{1.0, -2.0, 0.5}, {}};
  const LpSolution s = SolveLp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(s.x, (Vec{1.0, 0.0, 1.0}));
}

TEST(LpSimplexTest, CustomUpperBounds) {
  LinearProgram lp{Matrix(0, 2), Vec(), Vec{1.0, 1.0}, Vec{0.25, 2.0}};
  const LpSolution s = SolveLp(lp);
  EXPECT_NEAR(s.objective, 2.25, 1e-12);
}

TEST(LpSimplexTest, RejectsShapeMismatch) {
  LinearProgram lp{Matrix(1, 3), Vec{1.0}, Vec{1.0, 1.0}, {}};
  EXPECT_THROW(SolveLp(lp), UsageError);
}

TEST(LpSimplexTest, DegenerateVertexTerminates) {
  // Many constraints through the same vertex (0.5, 0.5).
  LinearProgram lp;
  lp.a = Matrix{{1, 1}, {2, 2}, {1, 0.999999}, {3, 3}, {1, 1}, {-1, 1}};
  lp.b = Vec{1, 2, 1, 3, 1, 0};
  lp.c = Vec{1, 1};
  const LpSolution s = SolveLp(lp);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective, 1.0, 1e-6);
}

TEST(LpSimplexTest, MatchesVertexEnumerationOnSmallRandomLps) {
  Rng rng(DeriveSeed(7, "lp-unit"));
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.Index(5);
    const std::size_t m = 1 + rng.Index(6);
    const LinearProgram lp = RandomLp(rng, m, n);
    const auto oracle = testing::LpByVertexEnumeration(lp.a, lp.b, lp.c);
    const LpSolution s = SolveLp(lp);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_TRUE(s.optimal()) << "trial " << trial;
    EXPECT_NEAR(s.objective, *oracle, 1e-7 * (1.0 + std::abs(*oracle)));
    EXPECT_TRUE(Feasible(lp, s.x, kFeasTol));
  }
}

TEST(LpSimplexTest, NeverBeatenByRandomFeasiblePoints) {
  Rng rng(DeriveSeed(11, "lp-duality"));
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.Index(4);
    LinearProgram lp = RandomLp(rng, 1 + rng.Index(4), n);
    for (std::size_t i = 0; i < lp.b.size(); ++i) lp.b[i] = std::abs(lp.b[i]);
    const LpSolution s = SolveLp(lp);
    ASSERT_TRUE(s.optimal());
    int tried = 0;
    while (tried < 100) {
      Vec x(n);
      for (double& v : x) v = rng.Uniform();
      if (!Feasible(lp, x, 0.0)) x *= 0.0;
      ++tried;
      EXPECT_GE(s.objective, Dot(lp.c, x) - 1e-12);
    }
  }
}

TEST(LpSimplexTest, Deterministic) {
  Rng rng(3);
  const LinearProgram lp = RandomLp(rng, 5, 4);
  const LpSolution a = SolveLp(lp);
  const LpSolution b = SolveLp(lp);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.objective, b.objective);
}

}  // namespace
}  // namespace drsubmax
