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

// Dense bounded-variable primal simplex for
//
//   maximize c'x  subject to  Ax <= b,  0 <= x <= upper  (upper defaults to 1).
//
// Variable upper bounds are handled implicitly (nonbasic variables sit at
// either bound), so the tableau only has one row per constraint of A. Rows
// with negative right-hand side get an artificial variable; phase one drives
// the artificials to zero, after which they are fixed at zero for phase two.
// Entering variables follow Dantzig's largest-coefficient rule; after 3N
// consecutive degenerate pivots (N = tableau columns) the solver switches to
// Bland's rule for the rest of the phase.

#ifndef DRSUBMAX_LP_SIMPLEX_H_
#define DRSUBMAX_LP_SIMPLEX_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "drsubmax/numeric.h"

namespace drsubmax {

struct LinearProgram {
  Matrix a;  // m x n
  Vec b;     // m
  Vec c;     // n, maximized
  Vec upper; // n upper bounds; empty means all ones
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Vec x;
  double objective = 0.0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

namespace internal {

class BoundedSimplex {
 public:
  static constexpr double kPivotTol = 1e-9;
  static constexpr double kCostTol = 1e-9;
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  explicit BoundedSimplex(const LinearProgram& lp)
      : n_(lp.c.size()), m_(lp.b.size()) {
    if (n_ == 0) throw UsageError("LP needs at least one variable");
    if (lp.a.rows() != m_ || (m_ > 0 && lp.a.cols() != n_)) {
      throw UsageError("LP constraint matrix has wrong shape");
    }
    if (!lp.upper.empty() && lp.upper.size() != n_) {
      throw UsageError("LP upper-bound vector has wrong size");
    }
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!std::isfinite(lp.b[i])) throw UsageError("LP rhs not finite");
      if (lp.b[i] < 0.0) ++artificials;
    }
    cols_ = n_ + m_ + artificials;
    tab_.assign(m_ * cols_, 0.0);
    upper_.assign(cols_, kInf);
    at_upper_.assign(cols_, false);
    is_basic_.assign(cols_, false);
    basis_.assign(m_, 0);
    value_.assign(m_, 0.0);
    cost_.assign(cols_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      upper_[j] = lp.upper.empty() ? 1.0 : lp.upper[j];
      if (!(upper_[j] >= 0.0)) throw UsageError("LP upper bound negative");
    }
    std::size_t next_art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) At(i, j) = sign * lp.a(i, j);
      At(i, n_ + i) = sign;
      if (sign < 0.0) {
        At(i, next_art) = 1.0;
        basis_[i] = next_art++;
      } else {
        basis_[i] = n_ + i;
      }
      is_basic_[basis_[i]] = true;
      value_[i] = sign * lp.b[i];
    }
    objective_.assign(lp.c.begin(), lp.c.end());
  }

  LpSolution Solve() {
    LpSolution out;
    if (cols_ > n_ + m_) {
      for (std::size_t j = n_ + m_; j < cols_; ++j) cost_[j] = -1.0;
      RunPhase();
      double infeasibility = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= n_ + m_) infeasibility += value_[i];
      }
      if (infeasibility > kFeasTol) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
      for (std::size_t j = n_ + m_; j < cols_; ++j) {
        upper_[j] = 0.0;
        cost_[j] = 0.0;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= n_ + m_) value_[i] = 0.0;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective_[j];
    RunPhase();

    out.status = LpStatus::kOptimal;
    out.x = Vec(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!is_basic_[j] && at_upper_[j]) out.x[j] = upper_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = value_[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      out.x[j] = std::clamp(out.x[j], 0.0, upper_[j]);
      out.objective += objective_[j] * out.x[j];
    }
    return out;
  }

 private:
  double& At(std::size_t i, std::size_t j) { return tab_[i * cols_ + j]; }
  double At(std::size_t i, std::size_t j) const { return tab_[i * cols_ + j]; }

  double ReducedCost(std::size_t j) const {
    double d = cost_[j];
    for (std::size_t i = 0; i < m_; ++i) d -= cost_[basis_[i]] * At(i, j);
    return d;
  }

  void RunPhase() {
    const std::size_t degenerate_limit = 3 * cols_;
    const std::size_t iteration_cap = 1000 + 200 * (cols_ + m_);
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
      // Pricing.
      std::size_t entering = cols_;
      double best = 0.0;
      double entering_cost = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_basic_[j] || upper_[j] <= 0.0) continue;
        const double d = ReducedCost(j);
        const bool improving =
            at_upper_[j] ? d < -kCostTol : d > kCostTol;
        if (!improving) continue;
        if (bland) {
          entering = j;
          entering_cost = d;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = j;
          entering_cost = d;
        }
      }
      if (entering == cols_) return;
      const double dir = entering_cost > 0.0 ? 1.0 : -1.0;

      // Ratio test, including the entering variable's own bound flip.
      double theta = upper_[entering];
      std::size_t leave_row = m_;
      bool leave_to_upper = false;
      double leave_pivot = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double alpha = dir * At(i, entering);
        double limit;
        bool to_upper;
        if (alpha > kPivotTol) {
          limit = std::max(value_[i], 0.0) / alpha;
          to_upper = false;
        } else if (alpha < -kPivotTol && std::isfinite(upper_[basis_[i]])) {
          limit = std::max(upper_[basis_[i]] - value_[i], 0.0) / -alpha;
          to_upper = true;
        } else {
          continue;
        }
        // Ties with the bound flip keep the flip; ties between rows go to
        // the lowest basic index (Bland) or the largest pivot (Dantzig).
        bool take = limit < theta - 1e-12;
        if (!take && leave_row != m_ && limit <= theta + 1e-12) {
          take = bland ? basis_[i] < basis_[leave_row]
                       : std::abs(alpha) > std::abs(leave_pivot);
        }
        if (take) {
          theta = limit;
          leave_row = i;
          leave_to_upper = to_upper;
          leave_pivot = alpha;
        }
      }
      if (!std::isfinite(theta)) {
        throw std::runtime_error("simplex: unbounded direction");
      }

      if (theta < 1e-12) {
        if (++degenerate_run > degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
      }

      for (std::size_t i = 0; i < m_; ++i) {
        value_[i] -= dir * At(i, entering) * theta;
      }
      const double entering_value =
          (at_upper_[entering] ? upper_[entering] : 0.0) + dir * theta;
      if (leave_row == m_) {
        at_upper_[entering] = !at_upper_[entering];
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      Pivot(leave_row, entering);
      value_[leave_row] = entering_value;
      is_basic_[leaving] = false;
      at_upper_[leaving] = leave_to_upper;
      is_basic_[entering] = true;
      at_upper_[entering] = false;
      basis_[leave_row] = entering;
    }
    throw std::runtime_error("simplex: iteration cap exceeded");
  }

  void Pivot(std::size_t r, std::size_t c) {
    const double p = At(r, c);
    for (std::size_t j = 0; j < cols_; ++j) At(r, j) /= p;
    At(r, c) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = At(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) At(i, j) -= f * At(r, j);
      At(i, c) = 0.0;
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::vector<double> tab_;
  std::vector<double> upper_;
  std::vector<bool> at_upper_;
  std::vector<bool> is_basic_;
  std::vector<std::size_t> basis_;
  std::vector<double> value_;
  std::vector<double> cost_;
  std::vector<double> objective_;
};

}  // namespace internal

// Solves `lp`. An empty feasible region is reported through the status, not
// an exception.
inline LpSolution SolveLp(const LinearProgram& lp) {
  internal::BoundedSimplex solver(lp);
  return solver.Solve();
}

}  // namespace drsubmax

#endif  // DRSUBMAX_LP_SIMPLEX_H_
