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

// Seeded random instance generators. Every generator is a pure function of
// its spec; randomness for each component comes from DeriveSeed(seed, label).

#ifndef DRSUBMAX_GENERATORS_H_
#define DRSUBMAX_GENERATORS_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/numeric.h"
#include "drsubmax/objectives.h"
#include "drsubmax/rng.h"

namespace drsubmax {

enum class QuadraticDistribution { kUniform, kExponential };

struct QuadraticInstanceSpec {
  int n = 0;
  int m = 0;
  QuadraticDistribution distribution = QuadraticDistribution::kUniform;
  std::uint64_t seed = 0;
};

struct QuadraticInstance {
  std::shared_ptr<const QuadraticObjective> objective;
  std::shared_ptr<const HPolytope> polytope;
  Vec upper;               // u_j = min_i b_i / A_ij
  double min_over_box = 0; // min of 1/2 x'Hx + h'x over the enumerated box
};

// Exact minimum of 1/2 x'Hx + h'x over the box prod_j [0, w_j] when
// H_jj <= 0: the function is concave along every coordinate, so a minimizer
// sits at a box vertex. Walks all 2^n vertices in Gray-code order.
inline double MinQuadraticOverBoxVertices(const Matrix& hess, const Vec& lin, const Vec& w) {
  const std::size_t n = lin.size();
  if (n > 30) throw UsageError("box-vertex enumeration limited to n <= 30");
  Vec x(n);
  Vec hx(n);  // H x
  double value = 0.0;
  double best = 0.0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(step));
    const double delta = x[j] == 0.0 ? w[j] : -w[j];
    // q(x + delta e_j) - q(x) = delta (h_j + (Hx)_j) + delta^2 H_jj / 2.
    value += delta * (lin[j] + hx[j]) + 0.5 * delta * delta * hess(j, j);
    x[j] += delta;
    if (x[j] < 0.5 * w[j]) x[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) hx[i] += hess(i, j) * delta;
    best = std::min(best, value);
  }
  return best;
}

// H, A drawn per the chosen distribution; b = 1, u_j = min_i b_i / A_ij,
// h = -0.1 H'u, and c = M + 0.1|M| with M = -min q over the box
// prod_j [0, max(u_j, 1)], which covers both [0,u] and the unit box.
inline QuadraticInstance GenQuadratic(const QuadraticInstanceSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw UsageError("quadratic instance needs n, m >= 1");
  if (spec.n > 22) throw UsageError("quadratic generator limited to n <= 22");
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  const bool uniform = spec.distribution == QuadraticDistribution::kUniform;
  Rng h_rng(DeriveSeed(spec.seed, "quadratic-H"));
  Rng a_rng(DeriveSeed(spec.seed, "quadratic-A"));

  Matrix hess(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = uniform ? h_rng.Uniform(-1.0, 0.0) : -h_rng.Exponential(1.0);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = uniform ? a_rng.Uniform(0.01, 1.01) : a_rng.Exponential(0.25) + 0.01;
    }
  }
  Vec b(m, 1.0);
  Vec upper(n, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) upper[j] = std::min(upper[j], b[i] / a(i, j));
  }
  Vec lin = -0.1 * hess.TransposeTimes(upper);
  Vec box(n);
  for (std::size_t j = 0; j < n; ++j) box[j] = std::max(upper[j], 1.0);
  const double min_q = MinQuadraticOverBoxVertices(hess, lin, box);
  const double big_m = -min_q;
  const double offset = big_m + 0.1 * std::abs(big_m);

  QuadraticInstance out;
  out.objective = std::make_shared<QuadraticObjective>(std::move(hess), std::move(lin), offset);
  out.polytope = std::make_shared<HPolytope>(std::move(a), std::move(b));
  out.upper = std::move(upper);
  out.min_over_box = min_q;
  return out;
}

inline QuadraticInstance GenQuadraticUniform(int n, int m, std::uint64_t seed) {
  return GenQuadratic({n, m, QuadraticDistribution::kUniform, seed});
}

inline QuadraticInstance GenQuadraticExponential(int n, int m, std::uint64_t seed) {
  return GenQuadratic({n, m, QuadraticDistribution::kExponential, seed});
}

// Synthetic stand-in for a city's locations: a symmetric similarity matrix
// with entries uniform in [0,1] and unit diagonal, plus facility positions
// uniform in the unit square.
struct LocationInstance {
  Matrix similarity;
  std::vector<std::array<double, 2>> facilities;
  // Side of the unit square in distance units (a ~50 km metro area measured
  // in 200 km units).
  double distance_scale = 0.25;
};

inline LocationInstance GenLocationInstance(int n, std::uint64_t seed) {
  if (n < 1) throw UsageError("location instance needs n >= 1");
  Rng sim_rng(DeriveSeed(seed, "location-similarity"));
  Rng pos_rng(DeriveSeed(seed, "location-facilities"));
  LocationInstance inst;
  inst.similarity = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    inst.similarity(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double v = sim_rng.Uniform();
      inst.similarity(i, j) = v;
      inst.similarity(j, i) = v;
    }
  }
  inst.facilities.resize(n);
  for (auto& f : inst.facilities) f = {pos_rng.Uniform(), pos_rng.Uniform()};
  return inst;
}

// Objective for a user standing at `user`. The offset sum_i d_i keeps the
// value non-negative on the whole box without changing gradients.
inline std::shared_ptr<const LocationObjective> LocationForUser(
    const LocationInstance& inst, std::array<double, 2> user) {
  const std::size_t n = inst.facilities.size();
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = inst.facilities[i][0] - user[0];
    const double dy = inst.facilities[i][1] - user[1];
    d[i] = inst.distance_scale * std::sqrt(dx * dx + dy * dy);
  }
  double offset = 0.0;
  for (double v : d) offset += v;
  return std::make_shared<LocationObjective>(inst.similarity, std::move(d), offset);
}

inline std::shared_ptr<const LocationObjective> GenLocationSynthetic(int n, std::uint64_t seed) {
  const LocationInstance inst = GenLocationInstance(n, seed);
  Rng user_rng(DeriveSeed(seed, "location-user"));
  const double ux = user_rng.Uniform();
  const double uy = user_rng.Uniform();
  return LocationForUser(inst, {ux, uy});
}

}  // namespace drsubmax

#endif  // DRSUBMAX_GENERATORS_H_
