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

// Dense vectors, lattice operations and a finite-difference gradient checker.

#ifndef DRSUBMAX_NUMERIC_H_
#define DRSUBMAX_NUMERIC_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drsubmax {

// Feasibility slack for points of [0,1]^n and constraint checks.
inline constexpr double kFeasTol = 1e-9;
// Finite-difference agreement required of analytic gradients.
inline constexpr double kGradTol = 1e-4;
// Default tolerance of FeasibleSet::Contains.
inline constexpr double kMembershipTol = 1e-7;

// Caller violated a precondition (dimension mismatch, out-of-range input,
// protocol misuse).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n, double fill = 0.0) : data_(n, fill) {}
  Vec(std::initializer_list<double> values) : data_(values) {}
  explicit Vec(std::vector<double> values) : data_(std::move(values)) {}

  // Builds a point of [0,1]^n; entries outside the box by more than `tol`
  // are rejected.
  static Vec FeasiblePoint(std::vector<double> values, double tol = kFeasTol) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] >= -tol && values[i] <= 1.0 + tol)) {
        throw UsageError("coordinate " + std::to_string(i) +
                         " outside [0,1]: " + std::to_string(values[i]));
      }
    }
    return Vec(std::move(values));
  }

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  std::span<const double> view() const { return data_; }
  const std::vector<double>& values() const { return data_; }

  Vec& operator+=(const Vec& other) {
    RequireSameSize(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other[i];
    return *this;
  }
  Vec& operator-=(const Vec& other) {
    RequireSameSize(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend bool operator==(const Vec& a, const Vec& b) = default;

  static void RequireSameSize(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
      throw UsageError("dimension mismatch: " + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()));
    }
  }

 private:
  std::vector<double> data_;
};

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(double s, Vec a) { return a *= s; }
inline Vec operator*(Vec a, double s) { return a *= s; }
inline Vec operator-(Vec a) { return a *= -1.0; }

inline double Dot(const Vec& a, const Vec& b) {
  Vec::RequireSameSize(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double Norm2(const Vec& x) { return std::sqrt(Dot(x, x)); }

inline double InfNorm(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// Coordinate-wise maximum, x ∨ y.
inline Vec Join(const Vec& x, const Vec& y) {
  Vec::RequireSameSize(x, y);
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

// Coordinate-wise minimum, x ∧ y.
inline Vec Meet(const Vec& x, const Vec& y) {
  Vec::RequireSameSize(x, y);
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

// (1 - step) * from + step * to.
inline Vec ConvexStep(const Vec& from, const Vec& to, double step) {
  Vec::RequireSameSize(from, to);
  Vec r(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    r[i] = (1.0 - step) * from[i] + step * to[i];
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Vec& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  return os << ')';
}

inline Vec Clip(Vec x, double lo = 0.0, double hi = 1.0) {
  for (double& v : x) v = std::clamp(v, lo, hi);
  return x;
}

inline bool InUnitBox(const Vec& x, double tol = kFeasTol) {
  return std::all_of(x.begin(), x.end(), [tol](double v) {
    return v >= -tol && v <= 1.0 + tol;
  });
}

inline void RequireInUnitBox(const Vec& x, double tol = kFeasTol) {
  if (!InUnitBox(x, tol)) throw UsageError("point outside [0,1]^n");
}

// Row-major dense matrix; only what the solvers and objectives need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw UsageError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vec operator*(const Vec& x) const {
    if (x.size() != cols_) throw UsageError("matrix-vector dimension mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) s += data_[r * cols_ + c] * x[c];
      y[r] = s;
    }
    return y;
  }

  Vec TransposeTimes(const Vec& x) const {
    if (x.size() != rows_) throw UsageError("matrix-vector dimension mismatch");
    Vec y(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) y[c] += data_[r * cols_ + c] * x[r];
    }
    return y;
  }

  double FrobeniusNorm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Solves the dense square system m * x = rhs (m given row-major as n*n
// entries) by Gaussian elimination with partial pivoting. Returns false when
// a pivot falls below `singular_tol`.
inline bool SolveDense(std::vector<double> m, std::vector<double> rhs,
                       std::vector<double>& x, double singular_tol = 1e-14) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    }
    if (std::abs(m[piv * n + col]) < singular_tol) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i * n + c] * x[c];
    x[i] = s / m[i * n + i];
  }
  return true;
}

using ValueOracle = std::function<double(const Vec&)>;
using GradientOracle = std::function<Vec(const Vec&)>;

// Largest coordinate deviation between `gradient(x)` and central differences
// of `value` with the given step. x must be at least `step` inside the box.
inline double CheckGradient(const ValueOracle& value,
                            const GradientOracle& gradient, const Vec& x,
                            double step) {
  const Vec g = gradient(x);
  Vec::RequireSameSize(g, x);
  double worst = 0.0;
  Vec probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double up = value(probe);
    probe[i] = x[i] - step;
    const double down = value(probe);
    probe[i] = x[i];
    const double fd = (up - down) / (2.0 * step);
    worst = std::max(worst, std::abs(fd - g[i]));
  }
  return worst;
}

}  // namespace drsubmax

#endif  // DRSUBMAX_NUMERIC_H_
