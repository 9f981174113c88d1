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

// Convex bodies K inside [0,1]^n, accessed only through oracles: linear
// maximization, Euclidean projection, the point of least infinity norm and
// membership. All implementations are immutable after construction.

#ifndef DRSUBMAX_FEASIBLE_SET_H_
#define DRSUBMAX_FEASIBLE_SET_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drsubmax/lp_simplex.h"
#include "drsubmax/numeric.h"

namespace drsubmax {

// An iterative oracle ran out of iterations; carries its best iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Vec best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const Vec& best() const { return best_; }

 private:
  Vec best_;
};

class FeasibleSet {
 public:
  virtual ~FeasibleSet() = default;

  virtual std::size_t dimension() const = 0;

  // A maximizer of <c, x> over K.
  virtual Vec Lmo(const Vec& c) const = 0;

  // A point of K with the smallest infinity norm.
  virtual Vec MinInfNormPoint() const = 0;

  // The Euclidean projection of z onto K.
  virtual Vec Project(const Vec& z) const = 0;

  virtual bool Contains(const Vec& x, double tol = kMembershipTol) const = 0;

  // K lies in [0,1]^n, so sqrt(n) bounds its diameter.
  double DiameterUpperBound() const {
    return std::sqrt(static_cast<double>(dimension()));
  }

 protected:
  void RequireDimension(const Vec& v) const {
    if (v.size() != dimension()) {
      throw UsageError("expected dimension " + std::to_string(dimension()) +
                       ", got " + std::to_string(v.size()));
    }
  }
};

using FeasibleSetPtr = std::shared_ptr<const FeasibleSet>;

// {x in [0,1]^n : lo <= sum_i x_i <= hi}.
class SumBoxPolytope : public FeasibleSet {
 public:
  SumBoxPolytope(std::size_t n, double lo, double hi) : n_(n), lo_(lo), hi_(hi) {
    if (n == 0) throw UsageError("SumBoxPolytope needs n >= 1");
    if (!(lo >= 0.0 && lo <= hi && hi <= static_cast<double>(n))) {
      throw UsageError("SumBoxPolytope needs 0 <= lo <= hi <= n");
    }
  }

  std::size_t dimension() const override { return n_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // Greedy: fill coordinates with positive weight in decreasing order up to
  // `hi`, then top up to `lo` with the least negative ones. Ties go to the
  // lower index.
  Vec Lmo(const Vec& c) const override {
    RequireDimension(c);
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&c](std::size_t a, std::size_t b) { return c[a] > c[b]; });
    Vec x(n_);
    double total = 0.0;
    for (std::size_t j : order) {
      const double cap = c[j] > 0.0 ? hi_ : lo_;
      const double take = std::clamp(cap - total, 0.0, 1.0);
      if (take <= 0.0) break;
      x[j] = take;
      total += take;
    }
    return x;
  }

  Vec MinInfNormPoint() const override {
    return Vec(n_, lo_ / static_cast<double>(n_));
  }

  // Clip z - mu to the box, with the shift mu found by bisection so that the
  // active sum bound holds with equality, then solved exactly on the
  // resulting free set.
  Vec Project(const Vec& z) const override {
    RequireDimension(z);
    const Vec clipped = Clip(z);
    const double s0 = std::accumulate(clipped.begin(), clipped.end(), 0.0);
    if (s0 >= lo_ && s0 <= hi_) return clipped;
    const double target = s0 > hi_ ? hi_ : lo_;
    auto shifted_sum = [&z](double mu) {
      double s = 0.0;
      for (double v : z) s += std::clamp(v - mu, 0.0, 1.0);
      return s;
    };
    double left = *std::min_element(z.begin(), z.end()) - 1.0;  // sum = n
    double right = *std::max_element(z.begin(), z.end());       // sum = 0
    for (int it = 0; it < 200 && right - left > 0.0; ++it) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      if (shifted_sum(mid) > target) {
        left = mid;
      } else {
        right = mid;
      }
    }
    double mu = 0.5 * (left + right);
    // Exact solve on the free set identified by the bracket.
    double fixed = 0.0;
    double free_sum = 0.0;
    std::size_t free_count = 0;
    for (double v : z) {
      const double t = v - mu;
      if (t >= 1.0) {
        fixed += 1.0;
      } else if (t > 0.0) {
        free_sum += v;
        ++free_count;
      }
    }
    if (free_count > 0) {
      const double exact = (free_sum + fixed - target) / static_cast<double>(free_count);
      if (std::abs(exact - mu) <= 1e-6 * (1.0 + std::abs(mu))) mu = exact;
    }
    Vec x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = std::clamp(z[i] - mu, 0.0, 1.0);
    return x;
  }

  bool Contains(const Vec& x, double tol = kMembershipTol) const override {
    RequireDimension(x);
    if (!InUnitBox(x, tol)) return false;
    const double s = std::accumulate(x.begin(), x.end(), 0.0);
    return s >= lo_ - tol && s <= hi_ + tol;
  }

 private:
  std::size_t n_;
  double lo_;
  double hi_;
};

struct DykstraOptions {
  int max_sweeps = 10000;
  // Stop once no coordinate moves by more than this over a full sweep.
  double tolerance = 1e-8;
};

// {x in [0,1]^n : Ax <= b}.
class HPolytope : public FeasibleSet {
 public:
  HPolytope(Matrix a, Vec b, DykstraOptions options = {})
      : a_(std::move(a)), b_(std::move(b)), options_(options) {
    if (a_.cols() == 0) throw UsageError("HPolytope needs n >= 1");
    if (a_.rows() != b_.size()) throw UsageError("HPolytope: rows(A) != size(b)");
    LinearProgram lp{a_, b_, Vec(a_.cols()), {}};
    if (!SolveLp(lp).optimal()) throw UsageError("HPolytope is empty");
    row_norm2_.resize(a_.rows());
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      double s = 0.0;
      for (double v : a_.row(i)) s += v * v;
      row_norm2_[i] = s;
    }
  }

  // Reads "m n" followed by m rows holding n coefficients and the bound.
  static HPolytope FromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polytope file " + path);
    return FromStream(in, path);
  }

  static HPolytope FromStream(std::istream& in, const std::string& name = "<stream>") {
    long long m = -1, n = -1;
    if (!(in >> m >> n) || m < 0 || n < 1) {
      throw std::runtime_error(name + ": header must be \"m n\" with n >= 1");
    }
    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    Vec b(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
      for (long long j = 0; j <= n; ++j) {
        double v;
        if (!(in >> v)) {
          throw std::runtime_error(name + ": row " + std::to_string(i + 1) +
                                   " has fewer than n+1 numbers");
        }
        if (j < n) {
          a(i, j) = v;
        } else {
          b[i] = v;
        }
      }
    }
    return HPolytope(std::move(a), std::move(b));
  }

  std::size_t dimension() const override { return a_.cols(); }
  const Matrix& a() const { return a_; }
  const Vec& b() const { return b_; }

  Vec Lmo(const Vec& c) const override {
    RequireDimension(c);
    return SolveLp({a_, b_, c, {}}).x;
  }

  // min t  s.t.  Ax <= b,  x_i - t <= 0,  over variables (x, t).
  Vec MinInfNormPoint() const override {
    const std::size_t n = dimension();
    const std::size_t m = a_.rows();
    LinearProgram lp;
    lp.a = Matrix(m + n, n + 1);
    lp.b = Vec(m + n);
    lp.c = Vec(n + 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) lp.a(i, j) = a_(i, j);
      lp.b[i] = b_[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      lp.a(m + j, j) = 1.0;
      lp.a(m + j, n) = -1.0;
    }
    lp.c[n] = -1.0;
    const LpSolution s = SolveLp(lp);
    return Vec(std::vector<double>(s.x.begin(), s.x.begin() + n));
  }

  // Dykstra's alternating projections over the halfspaces of A and the box.
  Vec Project(const Vec& z) const override {
    RequireDimension(z);
    if (Contains(z, 0.0)) return z;
    const std::size_t n = dimension();
    const std::size_t m = a_.rows();
    Vec x = z;
    std::vector<Vec> correction(m + 1, Vec(n));
    for (int sweep = 0; sweep < options_.max_sweeps; ++sweep) {
      const Vec start = x;
      for (std::size_t i = 0; i < m; ++i) {
        Vec y = x + correction[i];
        if (row_norm2_[i] > 0.0) {
          double ay = 0.0;
          for (std::size_t j = 0; j < n; ++j) ay += a_(i, j) * y[j];
          const double excess = ay - b_[i];
          Vec p = y;
          if (excess > 0.0) {
            const double s = excess / row_norm2_[i];
            for (std::size_t j = 0; j < n; ++j) p[j] -= s * a_(i, j);
          }
          correction[i] = y - p;
          x = std::move(p);
        }
      }
      Vec y = x + correction[m];
      Vec p = Clip(y);
      correction[m] = y - p;
      x = std::move(p);
      double moved = 0.0;
      for (std::size_t j = 0; j < n; ++j) moved = std::max(moved, std::abs(x[j] - start[j]));
      if (moved < options_.tolerance && Contains(x, kFeasTol)) return x;
    }
    throw ConvergenceError("Dykstra projection did not converge", x);
  }

  bool Contains(const Vec& x, double tol = kMembershipTol) const override {
    RequireDimension(x);
    if (!InUnitBox(x, tol)) return false;
    const Vec ax = a_ * x;
    for (std::size_t i = 0; i < ax.size(); ++i) {
      if (ax[i] > b_[i] + tol) return false;
    }
    return true;
  }

 private:
  Matrix a_;
  Vec b_;
  DykstraOptions options_;
  std::vector<double> row_norm2_;
};

// Convex hull of finitely many points of [0,1]^n.
class VertexHull : public FeasibleSet {
 public:
  explicit VertexHull(std::vector<Vec> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw UsageError("VertexHull needs a vertex");
    for (const Vec& v : vertices_) {
      Vec::RequireSameSize(v, vertices_.front());
      RequireInUnitBox(v);
    }
    if (vertices_.front().empty()) throw UsageError("VertexHull needs n >= 1");
  }

  std::size_t dimension() const override { return vertices_.front().size(); }
  const std::vector<Vec>& vertices() const { return vertices_; }

  // Vertex scan; ties go to the lowest vertex index.
  Vec Lmo(const Vec& c) const override {
    RequireDimension(c);
    std::size_t best = 0;
    double best_value = Dot(c, vertices_[0]);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      const double v = Dot(c, vertices_[i]);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    return vertices_[best];
  }

  // min t over convex weights w with sum_i w_i v_i <= t componentwise.
  Vec MinInfNormPoint() const override {
    const std::size_t n = dimension();
    const std::size_t k = vertices_.size();
    LinearProgram lp;
    lp.a = Matrix(n + 2, k + 1);
    lp.b = Vec(n + 2);
    lp.c = Vec(k + 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < k; ++i) lp.a(j, i) = vertices_[i][j];
      lp.a(j, k) = -1.0;
    }
    for (std::size_t i = 0; i < k; ++i) {
      lp.a(n, i) = 1.0;
      lp.a(n + 1, i) = -1.0;
    }
    lp.b[n] = 1.0;
    lp.b[n + 1] = -1.0;
    lp.c[k] = -1.0;
    const LpSolution s = SolveLp(lp);
    return Combine(std::vector<double>(s.x.begin(), s.x.begin() + k));
  }

  // Wolfe's minimum-norm-point algorithm on the translated vertices v_i - z.
  Vec Project(const Vec& z) const override {
    RequireDimension(z);
    const std::size_t k = vertices_.size();
    std::vector<Vec> p;
    p.reserve(k);
    double scale = 0.0;
    for (const Vec& v : vertices_) {
      p.push_back(v - z);
      scale = std::max(scale, Dot(p.back(), p.back()));
    }
    const double tol = 1e-15 * std::max(scale, 1.0);
    const double weight_eps = 1e-14;

    std::size_t start = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (Dot(p[i], p[i]) < Dot(p[start], p[start])) start = i;
    }
    std::vector<std::size_t> corral{start};
    std::vector<double> weight{1.0};
    Vec x = p[start];

    constexpr int kMaxMajor = 10000;
    for (int major = 0; major < kMaxMajor; ++major) {
      std::size_t j = 0;
      double best = Dot(x, p[0]);
      for (std::size_t i = 1; i < k; ++i) {
        const double v = Dot(x, p[i]);
        if (v < best) {
          best = v;
          j = i;
        }
      }
      if (Dot(x, x) - best <= tol ||
          std::find(corral.begin(), corral.end(), j) != corral.end()) {
        return z + x;
      }
      corral.push_back(j);
      weight.push_back(0.0);
      while (true) {
        std::vector<double> alpha;
        if (!AffineMinimizer(p, corral, alpha)) {
          // Degenerate corral: drop the newest point and stop.
          corral.pop_back();
          weight.pop_back();
          return z + Mix(p, corral, weight);
        }
        if (*std::min_element(alpha.begin(), alpha.end()) > weight_eps) {
          weight = std::move(alpha);
          x = Mix(p, corral, weight);
          break;
        }
        double theta = 1.0;
        for (std::size_t q = 0; q < corral.size(); ++q) {
          if (alpha[q] <= weight_eps) {
            const double denom = weight[q] - alpha[q];
            if (denom > 0.0) theta = std::min(theta, weight[q] / denom);
          }
        }
        for (std::size_t q = 0; q < corral.size(); ++q) {
          weight[q] = theta * alpha[q] + (1.0 - theta) * weight[q];
        }
        std::vector<std::size_t> kept;
        std::vector<double> kept_weight;
        for (std::size_t q = 0; q < corral.size(); ++q) {
          if (weight[q] > weight_eps) {
            kept.push_back(corral[q]);
            kept_weight.push_back(weight[q]);
          }
        }
        const double total = std::accumulate(kept_weight.begin(), kept_weight.end(), 0.0);
        for (double& w : kept_weight) w /= total;
        corral = std::move(kept);
        weight = std::move(kept_weight);
        x = Mix(p, corral, weight);
      }
    }
    throw ConvergenceError("min-norm-point projection did not converge", z + x);
  }

  // Feasibility LP for convex weights reproducing x within `tol`.
  bool Contains(const Vec& x, double tol = kMembershipTol) const override {
    RequireDimension(x);
    if (!InUnitBox(x, tol)) return false;
    const std::size_t n = dimension();
    const std::size_t k = vertices_.size();
    LinearProgram lp;
    lp.a = Matrix(2 * n + 2, k);
    lp.b = Vec(2 * n + 2);
    lp.c = Vec(k);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        lp.a(2 * j, i) = vertices_[i][j];
        lp.a(2 * j + 1, i) = -vertices_[i][j];
      }
      lp.b[2 * j] = x[j] + tol;
      lp.b[2 * j + 1] = -x[j] + tol;
    }
    for (std::size_t i = 0; i < k; ++i) {
      lp.a(2 * n, i) = 1.0;
      lp.a(2 * n + 1, i) = -1.0;
    }
    lp.b[2 * n] = 1.0;
    lp.b[2 * n + 1] = -1.0;
    return SolveLp(lp).optimal();
  }

  Vec Combine(const std::vector<double>& weights) const {
    if (weights.size() != vertices_.size()) throw UsageError("weight count mismatch");
    Vec x(dimension());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += weights[i] * vertices_[i][j];
    }
    return x;
  }

 private:
  static Vec Mix(const std::vector<Vec>& p, const std::vector<std::size_t>& corral,
                 const std::vector<double>& weight) {
    Vec x(p.front().size());
    for (std::size_t q = 0; q < corral.size(); ++q) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += weight[q] * p[corral[q]][j];
    }
    return x;
  }

  // Minimum-norm point of the affine hull of the corral, as affine weights:
  // [G 1; 1' 0] [alpha; lambda] = [0; 1] with G the Gram matrix.
  static bool AffineMinimizer(const std::vector<Vec>& p,
                              const std::vector<std::size_t>& corral,
                              std::vector<double>& alpha) {
    const std::size_t s = corral.size();
    const std::size_t dim = s + 1;
    std::vector<double> m(dim * dim, 0.0);
    std::vector<double> rhs(dim, 0.0);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) m[a * dim + b] = Dot(p[corral[a]], p[corral[b]]);
      m[a * dim + s] = 1.0;
      m[s * dim + a] = 1.0;
    }
    rhs[s] = 1.0;
    std::vector<double> sol;
    if (!SolveDense(m, rhs, sol, 1e-13)) return false;
    alpha.assign(sol.begin(), sol.begin() + s);
    return true;
  }

  std::vector<Vec> vertices_;
};

// Cartesian product of blocks occupying consecutive coordinate ranges.
class ProductSet : public FeasibleSet {
 public:
  explicit ProductSet(std::vector<FeasibleSetPtr> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw UsageError("ProductSet needs a block");
    offset_.push_back(0);
    for (const auto& b : blocks_) offset_.push_back(offset_.back() + b->dimension());
  }

  std::size_t dimension() const override { return offset_.back(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const FeasibleSet& block(std::size_t j) const { return *blocks_[j]; }

  Vec Slice(const Vec& x, std::size_t j) const {
    return Vec(std::vector<double>(x.begin() + offset_[j], x.begin() + offset_[j + 1]));
  }

  Vec Lmo(const Vec& c) const override {
    RequireDimension(c);
    return Assemble([&](std::size_t j) { return blocks_[j]->Lmo(Slice(c, j)); });
  }

  // The infinity norm of a product point is the max over blocks, so the
  // per-block minimizers together minimize it.
  Vec MinInfNormPoint() const override {
    return Assemble([&](std::size_t j) { return blocks_[j]->MinInfNormPoint(); });
  }

  Vec Project(const Vec& z) const override {
    RequireDimension(z);
    return Assemble([&](std::size_t j) { return blocks_[j]->Project(Slice(z, j)); });
  }

  bool Contains(const Vec& x, double tol = kMembershipTol) const override {
    RequireDimension(x);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (!blocks_[j]->Contains(Slice(x, j), tol)) return false;
    }
    return true;
  }

 private:
  template <typename PerBlock>
  Vec Assemble(PerBlock per_block) const {
    Vec x(dimension());
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const Vec part = per_block(j);
      std::copy(part.begin(), part.end(), x.begin() + offset_[j]);
    }
    return x;
  }

  std::vector<FeasibleSetPtr> blocks_;
  std::vector<std::size_t> offset_;
};

}  // namespace drsubmax

#endif  // DRSUBMAX_FEASIBLE_SET_H_
