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

#include "drsubmax/numeric.h"

#include "drsubmax/rng.h"
#include "gtest/gtest.h"

namespace drsubmax {
namespace {

TEST(LatticeTest, JoinAndMeet) {
  EXPECT_EQ(Join(Vec{0.2, 0.8}, Vec{0.5, 0.1}), (Vec{0.5, 0.8}));
  EXPECT_EQ(Meet(Vec{0.2, 0.8}, Vec{0.5, 0.1}), (Vec{0.2, 0.1}));
  const Vec x{0.3, 0.6, 0.9};
  EXPECT_EQ(Join(x, x), x);
  EXPECT_EQ(Meet(x, x), x);
  EXPECT_EQ(Join(Vec(3), x), x);
  EXPECT_EQ(Meet(Vec(3, 1.0), x), x);
  EXPECT_THROW(Join(Vec(2), Vec(3)), UsageError);
  EXPECT_THROW(Meet(Vec(2), Vec(1)), UsageError);
}

TEST(LatticeTest, JoinPlusMeetIsSum) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x(6), y(6);
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = rng.Uniform(-2.0, 2.0);
      y[i] = rng.Uniform(-2.0, 2.0);
    }
    EXPECT_EQ(Join(x, y) + Meet(x, y), x + y);
    EXPECT_GE(InfNorm(Join(Vec::FeasiblePoint(Clip(x).values()),
                           Vec::FeasiblePoint(Clip(y).values()))),
              InfNorm(Clip(x)));
  }
}

TEST(NormTest, InfNorm) {
  EXPECT_EQ(InfNorm(Vec{0.05, 0.05}), 0.05);
  EXPECT_EQ(InfNorm(Vec{0.0, 0.0, 0.0}), 0.0);
  EXPECT_EQ(InfNorm(Vec{0.3, -0.7}), 0.7);
}

TEST(VecTest, FeasiblePointRejectsOutOfBox) {
  EXPECT_NO_THROW(Vec::FeasiblePoint({0.0, 1.0 + 5e-10}));
  EXPECT_THROW(Vec::FeasiblePoint({0.5, 1.1}), UsageError);
  EXPECT_THROW(Vec::FeasiblePoint({-1e-8}), UsageError);
}

TEST(VecTest, ArithmeticRequiresEqualDimension) {
  EXPECT_THROW(Vec(2) + Vec(3), UsageError);
  EXPECT_THROW(Dot(Vec(2), Vec(3)), UsageError);
  EXPECT_EQ(ConvexStep(Vec{0.0, 1.0}, Vec{1.0, 1.0}, 0.25), (Vec{0.25, 1.0}));
}

TEST(CheckGradientTest, LinearIsExact) {
  const Vec c{1.0, -2.0, 0.5};
  const double dev = CheckGradient([&](const Vec& x) { return Dot(c, x); },
                                   [&](const Vec&) { return c; }, Vec{0.5, 0.5, 0.5}, 1e-5);
  EXPECT_LT(dev, 1e-10);
}

TEST(CheckGradientTest, DetectsWrongGradient) {
  const double dev = CheckGradient([](const Vec& x) { return x[0] * x[0]; },
                                   [](const Vec&) { return Vec{0.0}; }, Vec{0.5}, 1e-5);
  EXPECT_NEAR(dev, 1.0, 1e-6);
}

TEST(SolveDenseTest, SolvesAndDetectsSingular) {
  std::vector<double> x;
  ASSERT_TRUE(SolveDense({2, 1, 1, 3}, {3, 5}, x));
  EXPECT_NEAR(x[0], 0.8, 1e-15);
  EXPECT_NEAR(x[1], 1.4, 1e-15);
  EXPECT_FALSE(SolveDense({1, 2, 2, 4}, {1, 2}, x));
}

}  // namespace
}  // namespace drsubmax
