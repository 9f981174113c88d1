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

// Offline non-monotone Frank-Wolfe: start at the minimum-infinity-norm point
// of K, take T steps y <- (1 - eps) y + eps s with s = LMO(grad F(y)), and
// return the best iterate.

#ifndef DRSUBMAX_NMFW_H_
#define DRSUBMAX_NMFW_H_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/numeric.h"
#include "drsubmax/objectives.h"

namespace drsubmax {

struct NmfwConfig {
  int T = 1;
  double eps = 0.5;

  // T = floor(ln 2 / eps).
  static NmfwConfig FromEps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("eps must lie in (0,1)");
    return {static_cast<int>(std::floor(std::log(2.0) / eps)), eps};
  }

  void Validate() const {
    if (!(eps > 0.0 && eps < 1.0)) throw UsageError("eps must lie in (0,1)");
    if (T < 1) throw UsageError("T must be >= 1");
  }
};

struct RunRecord {
  std::vector<Vec> iterates;  // y0 .. yT
  std::vector<double> values;  // F(y_i)
  std::size_t chosen = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;

  const Vec& best() const { return iterates[chosen]; }
  double best_value() const { return values[chosen]; }
};

inline RunRecord Nmfw(const Objective& obj, const FeasibleSet& set, const NmfwConfig& cfg,
                      std::uint64_t seed = 0) {
  cfg.Validate();
  if (set.dimension() != obj.dimension()) throw UsageError("objective and set dimensions differ");
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.seed = seed;
  rec.iterates.reserve(cfg.T + 1);
  rec.values.reserve(cfg.T + 1);
  Vec y = set.MinInfNormPoint();
  rec.iterates.push_back(y);
  rec.values.push_back(obj.Value(y));
  for (int i = 1; i <= cfg.T; ++i) {
    const Vec s = set.Lmo(obj.Gradient(y));
    y = ConvexStep(y, s, cfg.eps);
    // Guard against round-off pushing a coordinate a hair outside [0,1].
    y = Clip(y);
    rec.iterates.push_back(y);
    rec.values.push_back(obj.Value(y));
    if (rec.values.back() > rec.values[rec.chosen]) rec.chosen = rec.iterates.size() - 1;
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// Lower bound (1/4 - 3 eps)(1 - m) F(o) - 0.5 eps beta D^2.
inline double NmfwGuarantee(double eps, double min_inf_norm, double opt, double beta,
                            double diameter) {
  return (0.25 - 3.0 * eps) * (1.0 - min_inf_norm) * opt - 0.5 * eps * beta * diameter * diameter;
}

// Largest violation of 1 - |y_i|_inf >= (1 - eps)^i (1 - |y_0|_inf) along a
// trajectory; non-positive when the decay bound holds everywhere.
inline double InfNormDecayViolation(const std::vector<Vec>& iterates, double eps) {
  if (iterates.empty()) return 0.0;
  const double base = 1.0 - InfNorm(iterates.front());
  double worst = -std::numeric_limits<double>::infinity();
  double factor = 1.0;
  for (std::size_t i = 0; i < iterates.size(); ++i) {
    worst = std::max(worst, factor * base - (1.0 - InfNorm(iterates[i])));
    factor *= 1.0 - eps;
  }
  return worst;
}

}  // namespace drsubmax

#endif  // DRSUBMAX_NMFW_H_
