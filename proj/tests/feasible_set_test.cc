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

#include "drsubmax/feasible_set.h"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "drsubmax/rng.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace drsubmax {
namespace {

Vec RandomVec(Rng& rng, std::size_t n, double lo, double hi) {
  Vec v(n);
  for (double& x : v) x = rng.Uniform(lo, hi);
  return v;
}

HPolytope RandomHPolytope(Rng& rng, std::size_t m, std::size_t n) {
  Matrix a(m, n);
  Vec b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.Uniform(-1.0, 1.0);
    b[i] = rng.Uniform(0.1, 1.0);  // origin stays feasible
  }
  return HPolytope(std::move(a), std::move(b));
}

// A few differently shaped sets for the property checks.
std::vector<FeasibleSetPtr> SampleSets() {
  Rng rng(DeriveSeed(5, "sample-sets"));
  std::vector<FeasibleSetPtr> sets;
  sets.push_back(std::make_shared<SumBoxPolytope>(5, 0.1, 1.0));
  sets.push_back(std::make_shared<SumBoxPolytope>(3, 1.2, 2.5));
  sets.push_back(std::make_shared<HPolytope>(RandomHPolytope(rng, 3, 4)));
  Matrix lower{{-1.0, -1.0, -1.0}, {1.0, 1.0, 0.0}};
  sets.push_back(std::make_shared<HPolytope>(lower, Vec{-0.5, 1.2}));
  sets.push_back(std::make_shared<VertexHull>(std::vector<Vec>{
      {1.0, 0.0, 0.0, 1.0}, {0.0, 1.0, 1.0, 0.0}, {0.0, 0.0, 0.5, 0.5}}));
  sets.push_back(std::make_shared<VertexHull>(std::vector<Vec>{
      {0.2, 0.9, 0.1}, {0.7, 0.3, 0.8}, {0.5, 0.5, 0.5}, {0.9, 0.9, 0.2}, {0.1, 0.1, 0.6}}));
  return sets;
}

// Random member: random convex combination of LMO outputs.
Vec RandomMember(const FeasibleSet& set, Rng& rng) {
  const std::size_t n = set.dimension();
  const std::vector<double> w = rng.SimplexWeights(4);
  Vec x(n);
  for (double wi : w) x += wi * set.Lmo(RandomVec(rng, n, -1.0, 1.0));
  return x;
}

TEST(SumBoxPolytopeTest, LmoExampleAgainstGrid) {
  SumBoxPolytope set(2, 0.1, 1.0);
  const Vec c{1.0, -1.0};
  const Vec x = set.Lmo(c);
  EXPECT_EQ(x, (Vec{1.0, 0.0}));
  double grid_best = -std::numeric_limits<double>::infinity();
  testing::ForEachGridPoint(2, 1000, [&](const Vec& p) {
    if (set.Contains(p, 1e-12)) grid_best = std::max(grid_best, Dot(c, p));
  });
  EXPECT_GE(Dot(c, x), grid_best - 1e-12);
}

TEST(SumBoxPolytopeTest, LmoFillsLowerBoundWithLeastNegative) {
  SumBoxPolytope set(3, 1.5, 2.0);
  EXPECT_EQ(set.Lmo(Vec{-3.0, -1.0, -2.0}), (Vec{0.0, 1.0, 0.5}));
}

TEST(SumBoxPolytopeTest, ZeroDirectionGivesMember) {
  SumBoxPolytope set(4, 0.3, 1.0);
  const Vec x = set.Lmo(Vec(4));
  EXPECT_TRUE(set.Contains(x));
}

TEST(SumBoxPolytopeTest, MinInfNormSpreadsMandatoryMass) {
  SumBoxPolytope set(2, 0.1, 1.0);
  const Vec y = set.MinInfNormPoint();
  EXPECT_NEAR(y[0], 0.05, 1e-15);
  EXPECT_NEAR(y[1], 0.05, 1e-15);
  double grid_best = 1.0;
  testing::ForEachGridPoint(2, 1000, [&](const Vec& p) {
    if (set.Contains(p, 1e-12)) grid_best = std::min(grid_best, InfNorm(p));
  });
  EXPECT_NEAR(InfNorm(y), grid_best, 1e-12);
}

TEST(SumBoxPolytopeTest, DownClosedHasZeroMinInfNorm) {
  EXPECT_EQ(InfNorm(SumBoxPolytope(3, 0.0, 1.0).MinInfNormPoint()), 0.0);
}

TEST(SumBoxPolytopeTest, ClosedFormMinInfNormMatchesLpRoute) {
  SumBoxPolytope set(4, 0.7, 2.0);
  HPolytope same(Matrix{{1, 1, 1, 1}, {-1, -1, -1, -1}}, Vec{2.0, -0.7});
  EXPECT_NEAR(InfNorm(set.MinInfNormPoint()), InfNorm(same.MinInfNormPoint()), 1e-9);
}

TEST(SumBoxPolytopeTest, ProjectionBySymmetry) {
  SumBoxPolytope set(2, 0.0, 1.0);
  const Vec p = set.Project(Vec{2.0, 2.0});
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.5, 1e-12);
}

TEST(SumBoxPolytopeTest, ProjectionOfFarPointsAndLowerBound) {
  SumBoxPolytope set(3, 0.9, 1.0);
  const Vec p = set.Project(Vec{-5.0, -5.0, -4.0});
  EXPECT_TRUE(set.Contains(p, 1e-12));
  EXPECT_NEAR(p[2], 0.9, 1e-12);
  const Vec q = set.Project(Vec{400.0, 400.0, 1.0});
  EXPECT_NEAR(q[0], 0.5, 1e-12);
  EXPECT_NEAR(q[1], 0.5, 1e-12);
  EXPECT_NEAR(q[2], 0.0, 1e-12);
}

TEST(SumBoxPolytopeTest, Membership) {
  SumBoxPolytope set(2, 0.1, 1.0);
  EXPECT_TRUE(set.Contains(Vec{0.05, 0.05}));
  EXPECT_FALSE(set.Contains(Vec{0.01, 0.01}));
}

TEST(SumBoxPolytopeTest, RejectsBadBounds) {
  EXPECT_THROW(SumBoxPolytope(2, 0.5, 0.4), UsageError);
  EXPECT_THROW(SumBoxPolytope(2, 0.0, 3.0), UsageError);
  EXPECT_THROW(SumBoxPolytope(2, 0.0, 1.0).Lmo(Vec{1.0}), UsageError);
}

TEST(VertexHullTest, LmoScansVertices) {
  VertexHull set({{1.0, 0.0}, {0.0, 1.0}});
  EXPECT_EQ(set.Lmo(Vec{2.0, 1.0}), (Vec{1.0, 0.0}));
  EXPECT_EQ(set.Lmo(Vec{1.0, 1.0}), (Vec{1.0, 0.0}));  // tie: lowest index
}

TEST(VertexHullTest, MembershipOfConvexCombination) {
  // P_{h=0.5,k=2}: v1 = (1,0 | 0,1), v2 = (0,1 | 1,0), u = (0,0 | 0.5,0.5).
  VertexHull set({{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 0.5, 0.5}});
  EXPECT_TRUE(set.Contains(Vec{0.5, 0.0, 0.25, 0.75}));
  EXPECT_FALSE(set.Contains(Vec{0.5, 0.5, 0.0, 0.0}));
}

TEST(VertexHullTest, ProjectionMatchesActiveSetOracleOnSimplexFace) {
  // The hull of the unit vectors of R^3 is {x >= 0, sum x = 1}.
  VertexHull set({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  HPolytope same(Matrix{{1, 1, 1}, {-1, -1, -1}}, Vec{1.0, -1.0});
  Rng rng(DeriveSeed(9, "hull-projection"));
  for (int trial = 0; trial < 30; ++trial) {
    const Vec z = RandomVec(rng, 3, -1.0, 2.0);
    const Vec expected = testing::ProjectionByActiveSets(same.a(), same.b(), z);
    EXPECT_LE(Norm2(set.Project(z) - expected), 1e-9) << "trial " << trial;
  }
}

TEST(HPolytopeTest, ProjectionMatchesExactOracleAndGrid) {
  Rng rng(DeriveSeed(21, "hpoly-projection"));
  for (int trial = 0; trial < 10; ++trial) {
    const HPolytope set = RandomHPolytope(rng, 3, 3);
    const Vec z = RandomVec(rng, 3, -0.5, 1.5);
    const Vec p = set.Project(z);
    const Vec exact = testing::ProjectionByActiveSets(set.a(), set.b(), z);
    EXPECT_LE(Norm2(p - exact), 1e-6) << "trial " << trial;
    // No grid point of K is closer to z than the projection.
    double grid_best = std::numeric_limits<double>::infinity();
    testing::ForEachGridPoint(3, 100, [&](const Vec& g) {
      if (set.Contains(g, 0.0)) grid_best = std::min(grid_best, Norm2(g - z));
    });
    EXPECT_LE(Norm2(p - z), grid_best + 1e-9);
  }
}

TEST(HPolytopeTest, ParsesMatrixFile) {
  std::istringstream in("2 2\n1 1 1\n-1 -1 -0.1\n");
  const HPolytope set = HPolytope::FromStream(in);
  EXPECT_EQ(set.dimension(), 2u);
  EXPECT_TRUE(set.Contains(Vec{0.05, 0.05}));
  EXPECT_FALSE(set.Contains(Vec{0.6, 0.6}));
}

TEST(HPolytopeTest, RejectsMalformedOrEmpty) {
  std::istringstream short_row("1 2\n1 1\n");
  EXPECT_THROW(HPolytope::FromStream(short_row), std::runtime_error);
  EXPECT_THROW(HPolytope(Matrix{{1.0, 1.0}}, Vec{-1.0}), UsageError);
}

TEST(HPolytopeTest, DykstraCapReportsBestIterate) {
  HPolytope set(Matrix{{1.0, 1.0}}, Vec{1.0}, DykstraOptions{1, 0.0});
  try {
    set.Project(Vec{3.0, -2.0});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.best().size(), 2u);
  }
}

TEST(FeasibleSetTest, DiameterUpperBound) {
  EXPECT_DOUBLE_EQ(SumBoxPolytope(4, 0, 1).DiameterUpperBound(), 2.0);
  EXPECT_DOUBLE_EQ(SumBoxPolytope(1, 0, 1).DiameterUpperBound(), 1.0);
  EXPECT_DOUBLE_EQ(SumBoxPolytope(2, 0, 1).DiameterUpperBound(), std::sqrt(2.0));
}

TEST(FeasibleSetTest, ProductSetComposesBlocks) {
  auto a = std::make_shared<SumBoxPolytope>(2, 0.2, 1.0);
  auto b = std::make_shared<SumBoxPolytope>(3, 0.6, 1.0);
  ProductSet set({a, b});
  EXPECT_EQ(set.dimension(), 5u);
  EXPECT_NEAR(InfNorm(set.MinInfNormPoint()), 0.2, 1e-15);
  EXPECT_EQ(set.Lmo(Vec{1, -1, -1, 2, 0}), (Vec{1, 0, 0, 1, 0}));
  EXPECT_FALSE(set.Contains(Vec{0.5, 0.5, 0, 0, 0}));
}

class FeasibleSetPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(FeasibleSetPropertyTest, LmoIsMemberAndScaleInvariant) {
  const FeasibleSetPtr set = SampleSets()[GetParam()];
  Rng rng(DeriveSeed(31, "lmo", GetParam()));
  for (int trial = 0; trial < 50; ++trial) {
    const Vec c = RandomVec(rng, set->dimension(), -1.0, 1.0);
    const Vec x = set->Lmo(c);
    EXPECT_TRUE(set->Contains(x, kFeasTol));
    const double alpha = rng.Uniform(0.1, 10.0);
    EXPECT_EQ(set->Lmo(alpha * c), x);
  }
}

TEST_P(FeasibleSetPropertyTest, MinInfNormPointIsMemberAndMinimal) {
  const FeasibleSetPtr set = SampleSets()[GetParam()];
  Rng rng(DeriveSeed(37, "mininf", GetParam()));
  const Vec y = set->MinInfNormPoint();
  EXPECT_TRUE(set->Contains(y, kFeasTol));
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_LE(InfNorm(y), InfNorm(RandomMember(*set, rng)) + 1e-6);
  }
}

TEST_P(FeasibleSetPropertyTest, ProjectionIdempotentAndOptimal) {
  const FeasibleSetPtr set = SampleSets()[GetParam()];
  Rng rng(DeriveSeed(41, "projection", GetParam()));
  for (int trial = 0; trial < 10; ++trial) {
    const Vec z = RandomVec(rng, set->dimension(), -1.0, 2.0);
    const Vec p = set->Project(z);
    EXPECT_TRUE(set->Contains(p, 1e-7));
    EXPECT_LE(Norm2(set->Project(p) - p), 1e-6);
    for (int k = 0; k < 100; ++k) {
      const Vec x = RandomMember(*set, rng);
      EXPECT_LE(Dot(z - p, x - p), 1e-6);
    }
  }
  const Vec member = RandomMember(*set, rng);
  EXPECT_LE(Norm2(set->Project(member) - member), 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Sets, FeasibleSetPropertyTest, ::testing::Range(0, 6));

}  // namespace
}  // namespace drsubmax
