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

// First-order oracles for non-negative DR-submodular objectives on [0,1]^n.

#ifndef DRSUBMAX_OBJECTIVES_H_
#define DRSUBMAX_OBJECTIVES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drsubmax/graph.h"
#include "drsubmax/numeric.h"
#include "drsubmax/rng.h"

namespace drsubmax {

class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;

  // F(x); x must lie in [0,1]^n.
  double Value(const Vec& x) const {
    CheckDomain(x);
    return ValueUnchecked(x);
  }

  Vec Gradient(const Vec& x) const {
    CheckDomain(x);
    return GradientUnchecked(x);
  }

  // Upper bound on the Lipschitz constant of the gradient, when the family
  // has a closed form for one.
  virtual std::optional<double> SmoothnessHint() const { return std::nullopt; }

 protected:
  virtual double ValueUnchecked(const Vec& x) const = 0;
  virtual Vec GradientUnchecked(const Vec& x) const = 0;

 private:
  void CheckDomain(const Vec& x) const {
    if (x.size() != dimension()) {
      throw UsageError("objective expects dimension " + std::to_string(dimension()) +
                       ", got " + std::to_string(x.size()));
    }
    RequireInUnitBox(x);
  }
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// F(x) = <c, x> with c >= 0.
class LinearObjective : public Objective {
 public:
  explicit LinearObjective(Vec c) : c_(std::move(c)) {
    for (double v : c_) {
      if (!(v >= 0.0)) throw UsageError("linear objective needs c >= 0");
    }
  }
  std::size_t dimension() const override { return c_.size(); }
  std::optional<double> SmoothnessHint() const override { return 0.0; }

 protected:
  double ValueUnchecked(const Vec& x) const override { return Dot(c_, x); }
  Vec GradientUnchecked(const Vec&) const override { return c_; }

 private:
  Vec c_;
};

// F(x) = 1/2 x'Hx + h'x + c with H symmetric and entrywise non-positive.
class QuadraticObjective : public Objective {
 public:
  QuadraticObjective(Matrix h_mat, Vec h_vec, double offset)
      : hess_(std::move(h_mat)), lin_(std::move(h_vec)), offset_(offset) {
    const std::size_t n = lin_.size();
    if (hess_.rows() != n || hess_.cols() != n) throw UsageError("H must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (hess_(i, j) != hess_(j, i)) throw UsageError("H must be symmetric");
        if (hess_(i, j) > 0.0) throw UsageError("H must be entrywise non-positive");
      }
    }
  }

  std::size_t dimension() const override { return lin_.size(); }
  const Matrix& hessian() const { return hess_; }
  const Vec& linear() const { return lin_; }
  double offset() const { return offset_; }

  // Frobenius norm bounds the spectral norm of H.
  std::optional<double> SmoothnessHint() const override {
    return hess_.FrobeniusNorm();
  }

 protected:
  double ValueUnchecked(const Vec& x) const override {
    return 0.5 * Dot(x, hess_ * x) + Dot(lin_, x) + offset_;
  }
  Vec GradientUnchecked(const Vec& x) const override { return hess_ * x + lin_; }

 private:
  Matrix hess_;
  Vec lin_;
  double offset_;
};

// Expected word-of-mouth revenue
//   F(x) = sum_{i != j} w_ij (1 - q^{x_i}) q^{x_j},  q = 1 - p,
// where each stored undirected edge contributes both ordered pairs.
class RevenueObjective : public Objective {
 public:
  RevenueObjective(GraphData graph, double p) : graph_(std::move(graph)), p_(p) {
    if (!(p > 0.0 && p < 1.0)) throw UsageError("revenue p must lie in (0,1)");
    log_q_ = std::log1p(-p);
    for (const Edge& e : graph_.edges) {
      if (e.u < 0 || e.v < 0 || e.u >= graph_.vertex_count || e.v >= graph_.vertex_count) {
        throw UsageError("edge endpoint outside vertex range");
      }
      if (!(e.weight >= 0.0)) throw UsageError("edge weight must be non-negative");
    }
  }

  std::size_t dimension() const override {
    return static_cast<std::size_t>(graph_.vertex_count);
  }
  const GraphData& graph() const { return graph_; }
  double p() const { return p_; }

  // Gershgorin on the Hessian: |d2F/dx_r^2| <= L^2 W_r and
  // |d2F/dx_r dx_s| <= 2 L^2 w_rs, with L = -ln q and W_r the weighted degree.
  std::optional<double> SmoothnessHint() const override {
    std::vector<double> degree(graph_.vertex_count, 0.0);
    for (const Edge& e : graph_.edges) {
      degree[e.u] += e.weight;
      degree[e.v] += e.weight;
    }
    const double max_degree =
        degree.empty() ? 0.0 : *std::max_element(degree.begin(), degree.end());
    return 3.0 * log_q_ * log_q_ * max_degree;
  }

 protected:
  double ValueUnchecked(const Vec& x) const override {
    double total = 0.0;
    for (const Edge& e : graph_.edges) {
      const double qu = std::exp(log_q_ * x[e.u]);
      const double qv = std::exp(log_q_ * x[e.v]);
      total += e.weight * ((1.0 - qu) * qv + (1.0 - qv) * qu);
    }
    return total;
  }

  // dF/dx_r = -ln(q) q^{x_r} [sum_j w_rj q^{x_j} - sum_i w_ir (1 - q^{x_i})].
  Vec GradientUnchecked(const Vec& x) const override {
    Vec bracket(dimension());
    for (const Edge& e : graph_.edges) {
      const double qu = std::exp(log_q_ * x[e.u]);
      const double qv = std::exp(log_q_ * x[e.v]);
      bracket[e.u] += e.weight * (qv - (1.0 - qv));
      bracket[e.v] += e.weight * (qu - (1.0 - qu));
    }
    Vec g(dimension());
    for (std::size_t r = 0; r < g.size(); ++r) {
      g[r] = -log_q_ * std::exp(log_q_ * x[r]) * bracket[r];
    }
    return g;
  }

 private:
  GraphData graph_;
  double p_;
  double log_q_;
};

// Multilinear extension of the facility-location style summary score
//   f(S) = (1/n) sum_i max_{j in S} M_ij - sum_{i in S} d_i  (+ offset),
// i.e. F(x) = (1/n) sum_i sum_j x_j M_ij prod_{j' ranked above j in row i}
// (1 - x_j') - <d, x> + offset. Each row is ranked by value, ties by column
// index, which gives the product a well-defined total order.
class LocationObjective : public Objective {
 public:
  LocationObjective(Matrix similarity, Vec distance, double offset = 0.0)
      : sim_(std::move(similarity)), dist_(std::move(distance)), offset_(offset) {
    const std::size_t n = dist_.size();
    if (sim_.rows() != n || sim_.cols() != n) throw UsageError("M must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(sim_(i, j) >= 0.0)) throw UsageError("similarities must be >= 0");
      }
      if (!(dist_[i] >= 0.0)) throw UsageError("distances must be >= 0");
    }
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& row = order_[i];
      row.resize(n);
      std::iota(row.begin(), row.end(), 0);
      std::stable_sort(row.begin(), row.end(), [this, i](std::size_t a, std::size_t b) {
        return sim_(i, a) > sim_(i, b);
      });
    }
  }

  std::size_t dimension() const override { return dist_.size(); }
  const Matrix& similarity() const { return sim_; }
  const Vec& distance() const { return dist_; }
  double offset() const { return offset_; }

  // Mixed partials of the max part are bounded by 2 max(M); the diagonal
  // vanishes (multilinear), so Gershgorin gives 2 (n - 1) max(M).
  std::optional<double> SmoothnessHint() const override {
    double m = 0.0;
    for (std::size_t i = 0; i < sim_.rows(); ++i) {
      for (double v : sim_.row(i)) m = std::max(m, v);
    }
    return 2.0 * static_cast<double>(dimension() - 1) * m;
  }

 protected:
  double ValueUnchecked(const Vec& x) const override {
    const std::size_t n = dimension();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double none_above = 1.0;
      for (std::size_t j : order_[i]) {
        total += x[j] * sim_(i, j) * none_above;
        none_above *= 1.0 - x[j];
      }
    }
    return total / static_cast<double>(n) - Dot(dist_, x) + offset_;
  }

  // For row i with ranking r_1, r_2, ...: dF/dx_{r_k} gets
  // P_k (M_{r_k} - Q_k) / n, where P_k = prod_{s<k} (1 - x_{r_s}) and
  // Q_k = sum_{t>k} x_{r_t} M_{r_t} prod_{k<s<t} (1 - x_{r_s}).
  Vec GradientUnchecked(const Vec& x) const override {
    const std::size_t n = dimension();
    Vec g(n);
    std::vector<double> prefix(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = order_[i];
      double p = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        prefix[k] = p;
        p *= 1.0 - x[row[k]];
      }
      double tail = 0.0;
      for (std::size_t k = n; k-- > 0;) {
        const std::size_t j = row[k];
        g[j] += prefix[k] * (sim_(i, j) - tail);
        tail = x[j] * sim_(i, j) + (1.0 - x[j]) * tail;
      }
    }
    for (std::size_t j = 0; j < n; ++j) g[j] = g[j] / static_cast<double>(n) - dist_[j];
    return g;
  }

 private:
  Matrix sim_;
  Vec dist_;
  double offset_;
  std::vector<std::vector<std::size_t>> order_;
};

// Multilinear extension of the directed cut of k disjoint arcs a_i -> b_i:
// F_k(x) = sum_i x_{a_i} (1 - x_{b_i}), coordinates ordered (a_1..a_k, b_1..b_k).
inline double MultilinearCutValue(int k, const Vec& x) {
  if (k < 1 || x.size() != 2 * static_cast<std::size_t>(k)) {
    throw UsageError("cut value expects 2k coordinates");
  }
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += x[i] * (1.0 - x[k + i]);
  return total;
}

inline Vec MultilinearCutGradient(int k, const Vec& x) {
  Vec g(2 * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    g[i] = 1.0 - x[k + i];
    g[k + i] = -x[i];
  }
  return g;
}

class CutObjective : public Objective {
 public:
  explicit CutObjective(int k) : k_(k) {
    if (k < 1) throw UsageError("cut objective needs k >= 1");
  }
  std::size_t dimension() const override { return 2 * static_cast<std::size_t>(k_); }
  int k() const { return k_; }
  std::optional<double> SmoothnessHint() const override {
    return std::sqrt(2.0 * k_);
  }

 protected:
  double ValueUnchecked(const Vec& x) const override { return MultilinearCutValue(k_, x); }
  Vec GradientUnchecked(const Vec& x) const override { return MultilinearCutGradient(k_, x); }

 private:
  int k_;
};

// Adds independent noise, uniform on [-sigma sqrt(3), sigma sqrt(3)] (mean 0,
// standard deviation sigma), to every coordinate of g.
inline Vec AddUniformNoise(Vec g, double sigma, Rng& rng) {
  if (sigma == 0.0) return g;
  const double half_width = sigma * std::sqrt(3.0);
  for (double& v : g) v += rng.Uniform(-half_width, half_width);
  return g;
}

// Unbiased stochastic gradients of an objective. Holds mutable RNG state:
// one instance per thread.
class NoisyGradient {
 public:
  NoisyGradient(ObjectivePtr inner, double sigma, std::uint64_t seed)
      : inner_(std::move(inner)), sigma_(sigma), rng_(seed) {
    if (!(sigma >= 0.0)) throw UsageError("noise scale must be >= 0");
  }

  const Objective& inner() const { return *inner_; }
  double sigma() const { return sigma_; }

  Vec Sample(const Vec& x) { return AddUniformNoise(inner_->Gradient(x), sigma_, rng_); }

 private:
  ObjectivePtr inner_;
  double sigma_;
  Rng rng_;
};

}  // namespace drsubmax

#endif  // DRSUBMAX_OBJECTIVES_H_
