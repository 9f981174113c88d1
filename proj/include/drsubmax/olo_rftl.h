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

// Online linear optimization (maximization) by Regularized-Follow-the-Leader
// with the Euclidean regularizer: the pick at step t is the projection of
// eta * (d_1 + ... + d_{t-1}) onto K.

#ifndef DRSUBMAX_OLO_RFTL_H_
#define DRSUBMAX_OLO_RFTL_H_

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/numeric.h"

namespace drsubmax {

struct RftlOptions {
  // Fixed learning rate; overrides everything else when set.
  std::optional<double> eta;
  // With both set, eta = D / (G sqrt(2T)).
  std::optional<double> gradient_bound;
  std::optional<int> horizon;
  // Defaults to the set's diameter bound.
  std::optional<double> diameter;
};

class Rftl {
 public:
  Rftl(FeasibleSetPtr set, RftlOptions opts = {})
      : set_(std::move(set)), opts_(opts), sum_(set_->dimension()) {
    diameter_ = opts_.diameter.value_or(set_->DiameterUpperBound());
    if (opts_.eta && !(*opts_.eta > 0.0)) throw UsageError("eta must be positive");
    if (opts_.gradient_bound && !(*opts_.gradient_bound > 0.0)) {
      throw UsageError("gradient bound must be positive");
    }
    if (opts_.horizon && *opts_.horizon < 1) throw UsageError("horizon must be >= 1");
  }

  // Current pick u_t; cached until the next Feed.
  const Vec& Pick() {
    if (!pick_) pick_ = set_->Project(eta() * sum_);
    return *pick_;
  }

  void Feed(const Vec& d) {
    if (d.size() != sum_.size()) throw UsageError("adversarial vector has wrong dimension");
    for (double v : d) {
      if (!std::isfinite(v)) throw UsageError("adversarial vector must be finite");
    }
    sum_ += d;
    max_norm_ = std::max(max_norm_, Norm2(d));
    ++steps_;
    pick_.reset();
  }

  // Learning rate used for the next pick. The adaptive rate uses the round
  // index t = steps + 1 and the largest norm fed so far.
  double eta() const {
    if (opts_.eta) return *opts_.eta;
    if (opts_.gradient_bound && opts_.horizon) {
      return diameter_ / (*opts_.gradient_bound * std::sqrt(2.0 * *opts_.horizon));
    }
    if (max_norm_ == 0.0) return 0.0;
    return diameter_ / (max_norm_ * std::sqrt(2.0 * static_cast<double>(steps_ + 1)));
  }

  int steps() const { return steps_; }
  double max_gradient_norm() const { return max_norm_; }
  double diameter() const { return diameter_; }
  const Vec& accumulated() const { return sum_; }
  const FeasibleSet& set() const { return *set_; }

 private:
  FeasibleSetPtr set_;
  RftlOptions opts_;
  double diameter_ = 0.0;
  Vec sum_;
  double max_norm_ = 0.0;
  int steps_ = 0;
  std::optional<Vec> pick_;
};

// max_{x in K} sum_t <x, d_t> - sum_t <u_t, d_t>.
inline double RegretOf(const std::vector<Vec>& picks, const std::vector<Vec>& ds,
                       const FeasibleSet& set) {
  if (picks.size() != ds.size()) throw UsageError("picks and ds must have equal length");
  Vec total(set.dimension());
  double earned = 0.0;
  for (std::size_t t = 0; t < ds.size(); ++t) {
    total += ds[t];
    earned += Dot(picks[t], ds[t]);
  }
  return Dot(set.Lmo(total), total) - earned;
}

// D G sqrt(2T).
inline double RftlRegretBound(double diameter, double gradient_bound, int horizon) {
  return diameter * gradient_bound * std::sqrt(2.0 * horizon);
}

}  // namespace drsubmax

#endif  // DRSUBMAX_OLO_RFTL_H_
