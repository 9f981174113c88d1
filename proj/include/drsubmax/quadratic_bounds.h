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

// Reference optima for generated quadratic instances, which maximize
// 1/2 x'Hx + h'x + c over {x in [0,1]^n : Ax <= b} with A > 0 and H <= 0.

#ifndef DRSUBMAX_QUADRATIC_BOUNDS_H_
#define DRSUBMAX_QUADRATIC_BOUNDS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "drsubmax/generators.h"
#include "drsubmax/numeric.h"
#include "drsubmax/rng.h"

namespace drsubmax {

namespace internal {

// Largest feasible value of coordinate j given the others (A > 0).
inline double CoordinateCeiling(const Matrix& a, const Vec& b, const Vec& x, std::size_t j) {
  double hi = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double slack = b[i];
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k != j) slack -= a(i, k) * x[k];
    }
    hi = std::min(hi, slack / a(i, j));
  }
  return hi;
}

// Maximizer of the concave parabola along coordinate j over [0, hi].
inline double CoordinateArgmax(const QuadraticObjective& f, const Vec& x, std::size_t j,
                               double hi) {
  const Matrix& h = f.hessian();
  double slope = f.linear()[j];
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != j) slope += h(j, k) * x[k];
  }
  if (h(j, j) < 0.0) return std::clamp(-slope / h(j, j), 0.0, hi);
  return slope > 0.0 ? hi : 0.0;
}

}  // namespace internal

// Grid search with spacing 1/res over the first n - 1 coordinates and the
// exact best feasible value of the last one; at least as large as the plain
// grid optimum at the same spacing.
inline double QuadraticGridOptimum(const QuadraticInstance& inst, int res) {
  const auto& f = *inst.objective;
  const Matrix& a = inst.polytope->a();
  const Vec& b = inst.polytope->b();
  const std::size_t n = f.dimension();
  std::vector<int> idx(n - 1, 0);
  Vec x(n);
  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t j = 0; j + 1 < n; ++j) x[j] = static_cast<double>(idx[j]) / res;
    x[n - 1] = 0.0;
    const double hi = internal::CoordinateCeiling(a, b, x, n - 1);
    if (hi >= -1e-12) {
      x[n - 1] = internal::CoordinateArgmax(f, x, n - 1, std::max(hi, 0.0));
      best = std::max(best, f.Value(x));
    }
    std::size_t j = 0;
    while (j + 1 < n && idx[j] == res) idx[j++] = 0;
    if (j + 1 >= n) break;
    ++idx[j];
  }
  return best;
}

// Best value found by exact coordinate ascent from the origin and from
// `starts` random feasible points; a lower bound on the optimum.
inline double QuadraticMultiStartLowerBound(const QuadraticInstance& inst, int starts,
                                            std::uint64_t seed) {
  const auto& f = *inst.objective;
  const Matrix& a = inst.polytope->a();
  const Vec& b = inst.polytope->b();
  const std::size_t n = f.dimension();
  Rng rng(DeriveSeed(seed, "quadratic-multistart"));
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s <= starts; ++s) {
    Vec x(n);
    if (s > 0) {
      // Random direction scaled to a random fraction of the feasible ray.
      for (double& v : x) v = rng.Uniform();
      double scale = 1.0 / std::max(InfNorm(x), 1e-12);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
        if (row > 0.0) scale = std::min(scale, b[i] / row);
      }
      x *= scale * rng.Uniform();
    }
    double value = f.Value(x);
    for (int sweep = 0; sweep < 500; ++sweep) {
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = 0.0;
        const double hi = std::max(internal::CoordinateCeiling(a, b, x, j), 0.0);
        x[j] = internal::CoordinateArgmax(f, x, j, hi);
      }
      const double next = f.Value(x);
      const bool stalled = next <= value + 1e-13;
      value = std::max(value, next);
      if (stalled) break;
    }
    best = std::max(best, value);
  }
  return best;
}

// c + max_K h'x: x'Hx <= 0 on the non-negative orthant, so this bounds the
// optimum from above.
inline double QuadraticLinearUpperBound(const QuadraticInstance& inst) {
  const auto& f = *inst.objective;
  return f.offset() + Dot(f.linear(), inst.polytope->Lmo(f.linear()));
}

}  // namespace drsubmax

#endif  // DRSUBMAX_QUADRATIC_BOUNDS_H_
