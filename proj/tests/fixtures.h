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

// Shared objective instances and random-point helpers for the test suites.

#ifndef DRSUBMAX_TESTS_FIXTURES_H_
#define DRSUBMAX_TESTS_FIXTURES_H_

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drsubmax/generators.h"
#include "drsubmax/graph.h"
#include "drsubmax/objectives.h"
#include "drsubmax/rng.h"

namespace drsubmax::testing {

struct NamedObjective {
  std::string name;
  ObjectivePtr objective;
};

// One instance per objective family: revenue on a 50-vertex synthetic graph,
// a uniform quadratic with n = 8, location with n = 10 and the cut with k = 3.
inline std::vector<NamedObjective> ObjectiveFamilies() {
  std::vector<NamedObjective> out;
  out.push_back({"revenue", std::make_shared<RevenueObjective>(
                                RandomGraph(50, 200, true, 101), 0.3)});
  out.push_back({"quadratic", GenQuadraticUniform(8, 4, 202).objective});
  out.push_back({"location", GenLocationSynthetic(10, 303)});
  out.push_back({"cut", std::make_shared<CutObjective>(3)});
  return out;
}

inline Vec RandomPoint(Rng& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
  Vec x(n);
  for (double& v : x) v = rng.Uniform(lo, hi);
  return x;
}

// Random pair with x >= y coordinate-wise.
inline std::pair<Vec, Vec> RandomOrderedPair(Rng& rng, std::size_t n) {
  Vec x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = rng.Uniform();
    const double b = rng.Uniform();
    x[i] = std::max(a, b);
    y[i] = std::min(a, b);
  }
  return {x, y};
}

}  // namespace drsubmax::testing

#endif  // DRSUBMAX_TESTS_FIXTURES_H_
