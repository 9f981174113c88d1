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

// Online Meta-Frank-Wolfe. Each round runs L Frank-Wolfe steps from the
// minimum-infinity-norm point, taking step i's direction from the i-th
// online linear optimizer, plays the result, and only then observes F_t and
// feeds each optimizer a gradient estimate at the point its step started from.

#ifndef DRSUBMAX_META_FW_H_
#define DRSUBMAX_META_FW_H_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/nmfw.h"
#include "drsubmax/numeric.h"
#include "drsubmax/objectives.h"
#include "drsubmax/olo_rftl.h"
#include "drsubmax/rng.h"

namespace drsubmax {

// Source of the adversary's functions. Generate(t) is called for round t
// (1-based) only after the learner has played in that round.
class ObjectiveStream {
 public:
  virtual ~ObjectiveStream() = default;
  virtual ObjectivePtr Generate(int t) = 0;
};

// Wraps a callable as a stream.
class FunctionStream : public ObjectiveStream {
 public:
  explicit FunctionStream(std::function<ObjectivePtr(int)> fn) : fn_(std::move(fn)) {}
  ObjectivePtr Generate(int t) override { return fn_(t); }

 private:
  std::function<ObjectivePtr(int)> fn_;
};

// The same objective every round.
class ConstantStream : public ObjectiveStream {
 public:
  explicit ConstantStream(ObjectivePtr f) : f_(std::move(f)) {}
  ObjectivePtr Generate(int) override { return f_; }

 private:
  ObjectivePtr f_;
};

// Play-before-reveal protocol for a fixed number of rounds.
class OnlineProtocol {
 public:
  OnlineProtocol(ObjectiveStream& stream, int horizon) : stream_(stream), horizon_(horizon) {
    if (horizon < 1) throw UsageError("horizon must be >= 1");
  }

  // Starts the next round with the learner's decision.
  void Play(const Vec& y) {
    if (state_ == State::kAwaitReveal) throw UsageError("round already played");
    if (round_ == horizon_) throw UsageError("all rounds already played");
    ++round_;
    played_ = y;
    current_.reset();
    state_ = State::kAwaitReveal;
  }

  // The current round's objective; only available once the round was played.
  const ObjectivePtr& Reveal() {
    if (state_ == State::kAwaitPlay) {
      throw UsageError("objective of round " + std::to_string(round_ + 1) +
                       " requested before playing");
    }
    if (!current_) {
      current_ = stream_.Generate(round_);
      if (!current_) throw UsageError("stream produced no objective");
    }
    state_ = State::kRevealed;
    return current_;
  }

  int round() const { return round_; }
  int horizon() const { return horizon_; }
  const Vec& last_played() const { return played_; }

 private:
  enum class State { kAwaitPlay, kAwaitReveal, kRevealed };
  ObjectiveStream& stream_;
  int horizon_;
  int round_ = 0;
  State state_ = State::kAwaitPlay;
  Vec played_;
  ObjectivePtr current_;
};

struct MetaFwConfig {
  int T = 1;
  // Defaults to 1/sqrt(T).
  std::optional<double> eps;
  // Defaults to floor(ln 2 / eps).
  std::optional<int> L;
  // Gradient noise level (uniform on [-sigma sqrt 3, sigma sqrt 3]).
  double sigma = 0.0;
  std::uint64_t seed = 0;
  // Optional gradient bound; gives each optimizer a fixed learning rate.
  std::optional<double> gradient_bound;
  // Experimental: eps_t = 1/sqrt(t + 1) and L_t = floor(ln 2 / eps_t)
  // capped at L_max.
  bool dynamic_eps = false;
  int L_max = 100;

  double ResolvedEps() const {
    const double e = eps.value_or(1.0 / std::sqrt(static_cast<double>(T)));
    if (!(e > 0.0 && e < 1.0)) throw UsageError("eps must lie in (0,1)");
    return e;
  }

  int ResolvedL() const {
    if (dynamic_eps) return L_max;
    const int l = L.value_or(static_cast<int>(std::floor(std::log(2.0) / ResolvedEps())));
    return std::max(l, 1);
  }

  void Validate() const {
    if (T < 1) throw UsageError("T must be >= 1");
    if (L && *L < 1) throw UsageError("L must be >= 1");
    if (!(sigma >= 0.0)) throw UsageError("sigma must be >= 0");
    if (dynamic_eps && L_max < 1) throw UsageError("L_max must be >= 1");
    ResolvedEps();
  }
};

// Step size and step count used in round t.
inline std::pair<double, int> RoundSchedule(const MetaFwConfig& cfg, int t) {
  if (!cfg.dynamic_eps) return {cfg.ResolvedEps(), cfg.ResolvedL()};
  const double e = 1.0 / std::sqrt(static_cast<double>(t) + 1.0);
  const int l = static_cast<int>(std::floor(std::log(2.0) / e));
  return {e, std::clamp(l, 1, cfg.L_max)};
}

struct ProtocolEvent {
  enum class Kind { kPick, kPlay, kReveal, kGradient, kFeed };
  Kind kind;
  int round;
  int step;  // optimizer index for kPick, kGradient and kFeed, else 0
  Vec point;  // query point for kGradient, played vector for kPlay
};

struct OnlineRunRecord {
  std::vector<Vec> played;
  std::vector<double> values;      // F_t(y_t)
  std::vector<double> cumulative;  // running sum of values
  std::optional<double> comparator;
  std::vector<double> gradient_norms;  // largest estimator norm per round
  double smoothness = 0.0;             // largest objective smoothness hint seen
  double decay_violation = -std::numeric_limits<double>::infinity();
  double eps = 0.0;
  int L = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;

  double total() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
  double max_gradient_norm() const {
    double g = 0.0;
    for (double v : gradient_norms) g = std::max(g, v);
    return g;
  }
};

inline OnlineRunRecord MetaFw(ObjectiveStream& stream, FeasibleSetPtr set,
                              const MetaFwConfig& cfg,
                              std::vector<ProtocolEvent>* trace = nullptr) {
  cfg.Validate();
  const auto start = std::chrono::steady_clock::now();
  const int num_opt = cfg.ResolvedL();
  RftlOptions opts;
  if (cfg.gradient_bound) {
    opts.gradient_bound = cfg.gradient_bound;
    opts.horizon = cfg.T;
  }
  std::vector<Rftl> optimizers;
  optimizers.reserve(num_opt);
  for (int i = 0; i < num_opt; ++i) optimizers.emplace_back(set, opts);

  Rng noise_rng(DeriveSeed(cfg.seed, "meta-fw-noise"));
  OnlineProtocol protocol(stream, cfg.T);
  const Vec y0 = set->MinInfNormPoint();
  OnlineRunRecord rec;
  rec.seed = cfg.seed;
  rec.eps = cfg.ResolvedEps();
  rec.L = num_opt;
  auto log = [&](ProtocolEvent::Kind kind, int t, int i, const Vec* point) {
    if (trace) trace->push_back({kind, t, i, point ? *point : Vec()});
  };

  std::vector<Vec> inner;
  for (int t = 1; t <= cfg.T; ++t) {
    const auto [eps, steps] = RoundSchedule(cfg, t);
    inner.assign(1, y0);
    for (int i = 0; i < steps; ++i) {
      const Vec& s = optimizers[i].Pick();
      log(ProtocolEvent::Kind::kPick, t, i + 1, nullptr);
      inner.push_back(Clip(ConvexStep(inner.back(), s, eps)));
    }
    const Vec& y = inner.back();
    rec.decay_violation = std::max(rec.decay_violation, InfNormDecayViolation(inner, eps));
    protocol.Play(y);
    log(ProtocolEvent::Kind::kPlay, t, 0, &y);
    rec.played.push_back(y);

    const ObjectivePtr& f = protocol.Reveal();
    log(ProtocolEvent::Kind::kReveal, t, 0, nullptr);
    if (f->dimension() != set->dimension()) {
      throw UsageError("objective dimension does not match the feasible set");
    }
    const double value = f->Value(y);
    rec.values.push_back(value);
    rec.cumulative.push_back(rec.total() + value);
    rec.smoothness = std::max(rec.smoothness, f->SmoothnessHint().value_or(0.0));

    double round_norm = 0.0;
    for (int i = 0; i < steps; ++i) {
      log(ProtocolEvent::Kind::kGradient, t, i + 1, &inner[i]);
      Vec g = f->Gradient(inner[i]);
      if (cfg.sigma > 0.0) g = AddUniformNoise(std::move(g), cfg.sigma, noise_rng);
      round_norm = std::max(round_norm, Norm2(g));
      optimizers[i].Feed(g);
      log(ProtocolEvent::Kind::kFeed, t, i + 1, nullptr);
    }
    rec.gradient_norms.push_back(round_norm);
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ratio * comparator - sum_t F_t(y_t); positive means regret was incurred.
inline double ApproximationRegret(const OnlineRunRecord& rec, double comparator, double ratio) {
  return ratio * comparator - rec.total();
}

// (1/4 - 3 eps)(1 - m) comparator - (G + beta D) D sqrt(T).
inline double MetaFwGuarantee(double eps, double min_inf_norm, double comparator,
                              double gradient_bound, double beta, double diameter, int horizon) {
  return (0.25 - 3.0 * eps) * (1.0 - min_inf_norm) * comparator -
         (gradient_bound + beta * diameter) * diameter * std::sqrt(static_cast<double>(horizon));
}

}  // namespace drsubmax

#endif  // DRSUBMAX_META_FW_H_
