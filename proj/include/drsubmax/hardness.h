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

// Symmetry-gap instances built from the directed cut of k disjoint arcs.
//
// Over N_k = {a_1..a_k, b_1..b_k} the polytope P_{h,k} is the hull of
// v^(i) (a_i = 1, b_j = 1 for j != i, all else 0) and u (b_j = h). The
// scrambled instance copies N_k into l blocks; block j occupies coordinates
// [2kj, 2k(j+1)) in the order (a_{1,j}..a_{k,j}, b_{1,j}..b_{k,j}), and the
// permutation sigma_j mixes the copies back down to N_k by averaging.

#ifndef DRSUBMAX_HARDNESS_H_
#define DRSUBMAX_HARDNESS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/numeric.h"
#include "drsubmax/objectives.h"
#include "drsubmax/rng.h"

namespace drsubmax {

inline void RequireHardnessParams(int k, double h) {
  if (k < 1) throw UsageError("k must be >= 1");
  if (!(h >= 0.0 && h < 1.0)) throw UsageError("h must lie in [0,1)");
}

// Vertices v^(1)..v^(k) followed by u.
inline std::vector<Vec> BasicVertices(int k, double h) {
  RequireHardnessParams(k, h);
  std::vector<Vec> out;
  for (int i = 0; i < k; ++i) {
    Vec v(2 * k);
    v[i] = 1.0;
    for (int j = 0; j < k; ++j) {
      if (j != i) v[k + j] = 1.0;
    }
    out.push_back(std::move(v));
  }
  Vec u(2 * k);
  for (int j = 0; j < k; ++j) u[k + j] = h;
  out.push_back(std::move(u));
  return out;
}

inline std::shared_ptr<const VertexHull> BasicPolytope(int k, double h) {
  return std::make_shared<VertexHull>(BasicVertices(k, h));
}

// Replaces every a-coordinate by the mean of the a-coordinates, likewise b.
inline Vec Symmetrize(const Vec& x) {
  if (x.size() % 2 != 0 || x.empty()) throw UsageError("symmetrize expects 2k coordinates");
  const std::size_t k = x.size() / 2;
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mean_a += x[i];
    mean_b += x[k + i];
  }
  mean_a /= static_cast<double>(k);
  mean_b /= static_cast<double>(k);
  Vec out(x.size());
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = mean_a;
    out[k + i] = mean_b;
  }
  return out;
}

class ScrambledInstance {
 public:
  ScrambledInstance(int k, int ell, double h, std::uint64_t seed)
      : k_(k), ell_(ell), h_(h), seed_(seed) {
    RequireHardnessParams(k, h);
    if (ell < 1) throw UsageError("l must be >= 1");
    Rng rng(DeriveSeed(seed, "hardness-sigma"));
    for (int j = 0; j < ell; ++j) {
      sigma_.push_back(rng.Permutation(k));
      std::vector<int> inv(k);
      for (int i = 0; i < k; ++i) inv[sigma_.back()[i]] = i;
      sigma_inv_.push_back(std::move(inv));
    }
    basic_ = BasicPolytope(k, h);
    set_ = std::make_shared<ProductSet>(std::vector<FeasibleSetPtr>(ell, basic_));
  }

  int k() const { return k_; }
  int ell() const { return ell_; }
  double h() const { return h_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(k_) * ell_; }
  const std::vector<std::vector<int>>& sigma() const { return sigma_; }
  const std::shared_ptr<const VertexHull>& basic() const { return basic_; }
  const std::shared_ptr<const ProductSet>& set() const { return set_; }

  std::size_t A(int i, int j) const { return 2 * static_cast<std::size_t>(k_) * j + i; }
  std::size_t B(int i, int j) const { return A(i, j) + k_; }

  // x^sigma_{a_i} = (1/l) sum_j x_{a_{sigma_j(i), j}}, likewise for b.
  Vec ScrambledPoint(const Vec& x) const {
    RequireDim(x);
    Vec out(2 * k_);
    for (int j = 0; j < ell_; ++j) {
      for (int i = 0; i < k_; ++i) {
        out[i] += x[A(sigma_[j][i], j)];
        out[k_ + i] += x[B(sigma_[j][i], j)];
      }
    }
    out *= 1.0 / ell_;
    return out;
  }

  // The point y with y^sigma = z: y_{a_{i,j}} = z_{a_{sigma_j^{-1}(i)}}.
  Vec Lift(const Vec& z) const {
    if (z.size() != 2 * static_cast<std::size_t>(k_)) {
      throw UsageError("lift expects 2k coordinates");
    }
    Vec y(dimension());
    for (int j = 0; j < ell_; ++j) {
      for (int i = 0; i < k_; ++i) {
        y[A(i, j)] = z[sigma_inv_[j][i]];
        y[B(i, j)] = z[k_ + sigma_inv_[j][i]];
      }
    }
    return y;
  }

  // Per block, a Dirichlet(1,..,1) combination of the vertices of P_{h,k}.
  Vec RandomFeasiblePoint(Rng& rng) const {
    Vec x(dimension());
    for (int j = 0; j < ell_; ++j) {
      const Vec block = basic_->Combine(rng.SimplexWeights(k_ + 1));
      std::copy(block.begin(), block.end(), x.begin() + A(0, j));
    }
    return x;
  }

  double FBar(const Vec& x) const { return MultilinearCutValue(k_, ScrambledPoint(x)); }
  double GBar(const Vec& x) const {
    return MultilinearCutValue(k_, Symmetrize(ScrambledPoint(x)));
  }

  Vec FBarGradient(const Vec& x) const {
    const Vec inner = MultilinearCutGradient(k_, ScrambledPoint(x));
    Vec g(dimension());
    for (int j = 0; j < ell_; ++j) {
      for (int r = 0; r < k_; ++r) {
        g[A(r, j)] = inner[sigma_inv_[j][r]] / ell_;
        g[B(r, j)] = inner[k_ + sigma_inv_[j][r]] / ell_;
      }
    }
    return g;
  }

  // G-bar equals k * mean_a (1 - mean_b) over all coordinates of x.
  Vec GBarGradient(const Vec& x) const {
    const Vec sym = Symmetrize(ScrambledPoint(x));
    Vec g(dimension());
    for (int j = 0; j < ell_; ++j) {
      for (int i = 0; i < k_; ++i) {
        g[A(i, j)] = (1.0 - sym[k_]) / ell_;
        g[B(i, j)] = -sym[0] / ell_;
      }
    }
    return g;
  }

 private:
  void RequireDim(const Vec& x) const {
    if (x.size() != dimension()) throw UsageError("scrambled point has wrong dimension");
  }

  int k_;
  int ell_;
  double h_;
  std::uint64_t seed_;
  std::vector<std::vector<int>> sigma_;
  std::vector<std::vector<int>> sigma_inv_;
  std::shared_ptr<const VertexHull> basic_;
  std::shared_ptr<const ProductSet> set_;
};

// F-bar (symmetrized = false) or G-bar (symmetrized = true) as an objective.
class ScrambledCutObjective : public Objective {
 public:
  ScrambledCutObjective(std::shared_ptr<const ScrambledInstance> inst, bool symmetrized)
      : inst_(std::move(inst)), symmetrized_(symmetrized) {}

  std::size_t dimension() const override { return inst_->dimension(); }

  // The averaging map has operator norm 1/sqrt(l) and symmetrizing is an
  // orthogonal projection, so the cut's Frobenius bound shrinks by 1/l.
  std::optional<double> SmoothnessHint() const override {
    return std::sqrt(2.0 * inst_->k()) / inst_->ell();
  }

 protected:
  double ValueUnchecked(const Vec& x) const override {
    return symmetrized_ ? inst_->GBar(x) : inst_->FBar(x);
  }
  Vec GradientUnchecked(const Vec& x) const override {
    return symmetrized_ ? inst_->GBarGradient(x) : inst_->FBarGradient(x);
  }

 private:
  std::shared_ptr<const ScrambledInstance> inst_;
  bool symmetrized_;
};

struct GapReport {
  int k = 0;
  int ell = 0;
  double h = 0.0;
  std::uint64_t seed = 0;
  double max_f = 0.0;
  double max_g = 0.0;
  double ratio = 0.0;
};

// max F-bar is attained at the lift of v^(1). G-bar on K only depends on the
// weight d that a block puts on u, so max G-bar is scanned over d in steps of
// 1e-4 at lifts of (1 - d) (1/k) sum_i v^(i) + d u.
inline GapReport ComputeGapReport(int k, int ell, double h, std::uint64_t seed) {
  RequireHardnessParams(k, h);
  if (k * (1.0 - h) < 1.0) throw UsageError("gap report requires k >= 1/(1-h)");
  const ScrambledInstance inst(k, ell, h, seed);
  const std::vector<Vec> verts = BasicVertices(k, h);
  GapReport rep{k, ell, h, seed};
  rep.max_f = inst.FBar(inst.Lift(verts[0]));
  Vec center(2 * k);
  for (int i = 0; i < k; ++i) center += verts[i];
  center *= 1.0 / k;
  const int steps = 10000;
  rep.max_g = -std::numeric_limits<double>::infinity();
  for (int s = 0; s <= steps; ++s) {
    const double d = static_cast<double>(s) / steps;
    const Vec z = ConvexStep(center, verts[k], d);
    rep.max_g = std::max(rep.max_g, inst.GBar(inst.Lift(z)));
  }
  rep.ratio = rep.max_g / rep.max_f;
  return rep;
}

}  // namespace drsubmax

#endif  // DRSUBMAX_HARDNESS_H_
