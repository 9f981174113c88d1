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

#include "drsubmax/olo_rftl.h"

#include <memory>
#include <string>
#include <vector>

#include "drsubmax/rng.h"
#include "gtest/gtest.h"

namespace drsubmax {
namespace {

FeasibleSetPtr UnitBox(std::size_t n) {
  return std::make_shared<SumBoxPolytope>(n, 0.0, static_cast<double>(n));
}

TEST(RftlTest, FirstPickIsProjectionOfOrigin) {
  Rftl box(UnitBox(3));
  EXPECT_EQ(box.Pick(), Vec(3));
  Rftl sumbox(std::make_shared<SumBoxPolytope>(2, 1.0, 2.0));
  EXPECT_NEAR(sumbox.Pick()[0], 0.5, 1e-12);
  EXPECT_NEAR(sumbox.Pick()[1], 0.5, 1e-12);
}

TEST(RftlTest, ClippedPickOnInterval) {
  Rftl olo(UnitBox(1), {.eta = 1.0});
  olo.Feed(Vec{10.0});
  EXPECT_EQ(olo.Pick(), Vec{1.0});
}

TEST(RftlTest, SumBoxPickIsSymmetricProjection) {
  Rftl olo(std::make_shared<SumBoxPolytope>(2, 0.0, 1.0), {.eta = 1.0});
  olo.Feed(Vec{1.0, 1.0});
  EXPECT_NEAR(olo.Pick()[0], 0.5, 1e-12);
  EXPECT_NEAR(olo.Pick()[1], 0.5, 1e-12);
}

TEST(RftlTest, CancellingFeedsReturnToStart) {
  auto set = std::make_shared<SumBoxPolytope>(3, 0.5, 2.0);
  Rftl olo(set, {.eta = 0.7});
  const Vec start = olo.Pick();
  olo.Feed(Vec{0.3, -2.0, 1.0});
  olo.Feed(Vec{-0.3, 2.0, -1.0});
  EXPECT_EQ(olo.steps(), 2);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(olo.Pick()[j], start[j], 1e-12);
}

TEST(RftlTest, TracksLargestNorm) {
  Rftl olo(UnitBox(2));
  olo.Feed(Vec{3.0, 4.0});
  olo.Feed(Vec{1.0, 0.0});
  EXPECT_EQ(olo.max_gradient_norm(), 5.0);
}

TEST(RftlTest, LearningRateSchedules) {
  Rftl fixed(UnitBox(2), {.gradient_bound = 2.0, .horizon = 8});
  EXPECT_NEAR(fixed.eta(), std::sqrt(2.0) / (2.0 * 4.0), 1e-15);
  Rftl adaptive(UnitBox(2));
  EXPECT_EQ(adaptive.eta(), 0.0);
  adaptive.Feed(Vec{0.0, 2.0});
  EXPECT_NEAR(adaptive.eta(), std::sqrt(2.0) / (2.0 * 2.0), 1e-15);
  EXPECT_THROW(Rftl(UnitBox(2), {.eta = -1.0}), UsageError);
}

TEST(RftlTest, RejectsNonFiniteFeed) {
  Rftl olo(UnitBox(2));
  EXPECT_THROW(olo.Feed(Vec{1.0, std::nan("")}), UsageError);
  EXPECT_THROW(olo.Feed(Vec{1.0}), UsageError);
}

TEST(RftlTest, SameFeedsSamePicks) {
  auto set = std::make_shared<SumBoxPolytope>(4, 0.5, 2.0);
  Rftl a(set), b(set);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    Vec d(4);
    for (double& v : d) v = rng.Uniform(-1.0, 1.0);
    EXPECT_EQ(a.Pick(), b.Pick());
    a.Feed(d);
    b.Feed(d);
  }
}

TEST(RegretTest, OptimalPicksHaveZeroRegret) {
  SumBoxPolytope set(3, 0.0, 1.0);
  const std::vector<Vec> ds(5, Vec{0.2, 0.9, 0.1});
  const std::vector<Vec> picks(5, Vec{0.0, 1.0, 0.0});
  EXPECT_NEAR(RegretOf(picks, ds, set), 0.0, 1e-15);
  EXPECT_THROW(RegretOf(picks, {}, set), UsageError);
}

TEST(RegretTest, SingleStepWithinDiameterTimesNorm) {
  auto set = UnitBox(2);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Rftl olo(set, {.gradient_bound = 1.5, .horizon = 1});
    const Vec d{rng.Uniform(-1.0, 1.0), rng.Uniform(-1.0, 1.0)};
    const Vec u = olo.Pick();
    EXPECT_LE(RegretOf({u}, {d}, *set), set->DiameterUpperBound() * Norm2(d) + 1e-12);
  }
}

TEST(RegretTest, ConstantAdversary) {
  auto set = UnitBox(2);
  const Vec d{0.6, -0.8};
  const int horizon = 100;
  Rftl olo(set, {.gradient_bound = Norm2(d), .horizon = horizon});
  std::vector<Vec> picks, ds;
  for (int t = 0; t < horizon; ++t) {
    picks.push_back(olo.Pick());
    ds.push_back(d);
    olo.Feed(d);
  }
  const double regret = RegretOf(picks, ds, *set);
  EXPECT_GT(regret, 0.0);
  EXPECT_LE(regret, RftlRegretBound(set->DiameterUpperBound(), Norm2(d), horizon));
}

struct RegretCase {
  std::string name;
  FeasibleSetPtr set;
  int horizon;
};

class RftlRegretPropertyTest : public ::testing::TestWithParam<RegretCase> {};

// Random sequences with a per-sequence drift so the best fixed point is not
// trivially the start; G is the largest norm in the pre-drawn sequence.
TEST_P(RftlRegretPropertyTest, WithinBound) {
  const RegretCase& c = GetParam();
  const std::size_t n = c.set->dimension();
  for (int seq = 0; seq < 20; ++seq) {
    Rng rng(DeriveSeed(seq, c.name));
    Vec drift(n);
    for (double& v : drift) v = rng.Uniform(-0.5, 0.5);
    std::vector<Vec> ds;
    double g = 0.0;
    for (int t = 0; t < c.horizon; ++t) {
      Vec d = drift;
      for (double& v : d) v += rng.Uniform(-1.0, 1.0);
      g = std::max(g, Norm2(d));
      ds.push_back(std::move(d));
    }
    Rftl olo(c.set, {.gradient_bound = g, .horizon = c.horizon});
    std::vector<Vec> picks;
    for (const Vec& d : ds) {
      picks.push_back(olo.Pick());
      EXPECT_TRUE(c.set->Contains(picks.back()));
      olo.Feed(d);
    }
    const double bound = RftlRegretBound(olo.diameter(), g, c.horizon);
    EXPECT_LE(RegretOf(picks, ds, *c.set), bound + 1e-6) << c.name << " seq " << seq;
  }
}

std::vector<RegretCase> RegretCases() {
  std::vector<RegretCase> out;
  for (int horizon : {10, 100, 1000}) {
    out.push_back({"box_T" + std::to_string(horizon), UnitBox(5), horizon});
    out.push_back({"sumbox_T" + std::to_string(horizon),
                   std::make_shared<SumBoxPolytope>(5, 0.1, 1.0), horizon});
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Sequences, RftlRegretPropertyTest, ::testing::ValuesIn(RegretCases()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
}  // namespace drsubmax
