// Copyright 2026 The sharedres Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sharedres {

/// Relative distance below which two breakpoints are considered the same
/// time point (relative to the last breakpoint of the function).
inline constexpr double kBreakpointMergeRel = 1e-12;

/// A finitely supported, piecewise constant function of time on [0, inf).
///
/// Breakpoints t_0 = 0 < t_1 < ... < t_K delimit K right-open intervals
/// [t_k, t_{k+1}) carrying `values()[k]`; the function is 0 from t_K on. The
/// zero function has no breakpoints at all. Construction always produces the
/// canonical form: sliver intervals are absorbed, equal neighbours merged and
/// trailing zero intervals dropped.
class StepFunction {
 public:
  StepFunction() = default;

  StepFunction(std::vector<double> breakpoints, std::vector<double> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() && values_.empty()) return;
    if (breakpoints_.size() != values_.size() + 1) {
      throw std::invalid_argument(
          "StepFunction: need exactly one more breakpoint than values");
    }
    if (breakpoints_.front() != 0.0) {
      throw std::invalid_argument("StepFunction: first breakpoint must be 0");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!(breakpoints_[k + 1] > breakpoints_[k]) ||
          !std::isfinite(breakpoints_[k + 1])) {
        throw std::invalid_argument(
            "StepFunction: breakpoints must be finite and strictly increasing");
      }
      if (!std::isfinite(values_[k])) {
        throw std::invalid_argument("StepFunction: values must be finite");
      }
    }
    canonicalize();
  }

  /// `value` on [begin, end), zero elsewhere.
  static StepFunction constant(double value, double begin, double end) {
    if (!(end > begin) || value == 0.0) return {};
    if (begin <= 0.0) return StepFunction({0.0, end}, {value});
    return StepFunction({0.0, begin, end}, {0.0, value});
  }

  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] std::span<const double> breakpoints() const {
    return breakpoints_;
  }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t num_intervals() const { return values_.size(); }

  /// Value at time t; intervals are right-open so a breakpoint takes the
  /// value of the interval it starts.
  [[nodiscard]] double operator()(double t) const {
    if (empty() || t < 0.0 || t >= breakpoints_.back()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
  }

  /// sup{t : f(t) != 0}, or 0 for the zero function.
  [[nodiscard]] double support_end() const {
    return empty() ? 0.0 : breakpoints_.back();
  }

  [[nodiscard]] double integral() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      sum += values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
    }
    return sum;
  }

  /// Integral over [0, upto).
  [[nodiscard]] double integral_until(double upto) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (breakpoints_[k] >= upto) break;
      const double hi = std::min(breakpoints_[k + 1], upto);
      sum += values_[k] * (hi - breakpoints_[k]);
    }
    return sum;
  }

  /// Integral of t * f(t) over [0, inf).
  [[nodiscard]] double first_moment() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      const double a = breakpoints_[k];
      const double b = breakpoints_[k + 1];
      sum += values_[k] * 0.5 * (b - a) * (b + a);
    }
    return sum;
  }

  [[nodiscard]] double max_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, v);
    return m;
  }

  [[nodiscard]] double min_value() const {
    double m = 0.0;
    for (double v : values_) m = std::min(m, v);
    return m;
  }

  /// t -> c * f(t).
  [[nodiscard]] StepFunction scaled(double c) const {
    std::vector<double> vals = values_;
    for (double& v : vals) v *= c;
    return {breakpoints_, std::move(vals)};
  }

  /// t -> f(t / s), i.e. the graph stretched horizontally by s > 0.
  [[nodiscard]] StepFunction stretched(double s) const {
    if (!(s > 0.0)) throw std::invalid_argument("stretched: factor must be > 0");
    std::vector<double> bps = breakpoints_;
    for (double& t : bps) t *= s;
    return {std::move(bps), values_};
  }

  /// f restricted to [0, end).
  [[nodiscard]] StepFunction truncated(double end) const {
    if (empty() || end >= support_end()) return *this;
    if (end <= 0.0) return {};
    std::vector<double> bps{0.0};
    std::vector<double> vals;
    for (std::size_t k = 0; k < values_.size() && breakpoints_[k] < end; ++k) {
      vals.push_back(values_[k]);
      bps.push_back(std::min(breakpoints_[k + 1], end));
    }
    return {std::move(bps), std::move(vals)};
  }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

  /// Pointwise combination op(f(t), g(t)) on the merged breakpoint grid.
  template <class Op>
  static StepFunction combine(const StepFunction& f, const StepFunction& g,
                              Op op) {
    std::vector<double> grid;
    grid.reserve(f.breakpoints_.size() + g.breakpoints_.size());
    std::merge(f.breakpoints_.begin(), f.breakpoints_.end(),
               g.breakpoints_.begin(), g.breakpoints_.end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) return {};
    std::vector<double> vals;
    vals.reserve(grid.size() - 1);
    std::size_t fi = 0;
    std::size_t gi = 0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double t = grid[k];
      while (fi < f.values_.size() && f.breakpoints_[fi + 1] <= t) ++fi;
      while (gi < g.values_.size() && g.breakpoints_[gi + 1] <= t) ++gi;
      const double fv = fi < f.values_.size() ? f.values_[fi] : 0.0;
      const double gv = gi < g.values_.size() ? g.values_[gi] : 0.0;
      vals.push_back(op(fv, gv));
    }
    return {std::move(grid), std::move(vals)};
  }

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) { return a + b; });
  }
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) { return a - b; });
  }

 private:
  void canonicalize() {
    const double eps = kBreakpointMergeRel * breakpoints_.back();
    // Absorb slivers into a neighbouring interval.
    for (std::size_t k = 0; k < values_.size() && values_.size() > 1;) {
      if (breakpoints_[k + 1] - breakpoints_[k] >= eps) {
        ++k;
        continue;
      }
      if (k == 0) {
        breakpoints_.erase(breakpoints_.begin() + 1);
        values_.erase(values_.begin());
      } else {
        breakpoints_.erase(breakpoints_.begin() + static_cast<long>(k));
        values_.erase(values_.begin() + static_cast<long>(k));
      }
    }
    std::size_t out = 0;
    for (std::size_t k = 1; k < values_.size(); ++k) {
      if (values_[k] == values_[out]) continue;
      ++out;
      values_[out] = values_[k];
      breakpoints_[out] = breakpoints_[k];
    }
    if (!values_.empty()) {
      breakpoints_[out + 1] = breakpoints_.back();
      values_.resize(out + 1);
      breakpoints_.resize(out + 2);
    }
    while (!values_.empty() && values_.back() == 0.0) {
      values_.pop_back();
      breakpoints_.pop_back();
    }
    if (values_.empty()) breakpoints_.clear();
  }

  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Sum of many step functions in one merge pass.
inline StepFunction sum(std::span<const StepFunction> fs) {
  std::vector<double> grid;
  for (const auto& f : fs) {
    grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) return {};
  std::vector<double> vals(grid.size() - 1, 0.0);
  for (const auto& f : fs) {
    auto bps = f.breakpoints();
    auto fv = f.values();
    std::size_t k = 0;
    for (std::size_t i = 0; i < fv.size(); ++i) {
      while (k + 1 < grid.size() && grid[k] < bps[i + 1]) {
        vals[k] += fv[i];
        ++k;
      }
    }
  }
  return {std::move(grid), std::move(vals)};
}

/// Piecewise linear function on [0, inf), zero after its last breakpoint.
/// Interval k carries value `start_values()[k] + slopes()[k] * (t - t_k)`.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;

  PiecewiseLinear(std::vector<double> breakpoints,
                  std::vector<double> start_values, std::vector<double> slopes)
      : breakpoints_(std::move(breakpoints)),
        start_values_(std::move(start_values)),
        slopes_(std::move(slopes)) {
    if (breakpoints_.empty() && start_values_.empty() && slopes_.empty()) {
      return;
    }
    if (breakpoints_.size() != start_values_.size() + 1 ||
        slopes_.size() != start_values_.size()) {
      throw std::invalid_argument("PiecewiseLinear: inconsistent sizes");
    }
    for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
      if (!(breakpoints_[k + 1] > breakpoints_[k])) {
        throw std::invalid_argument(
            "PiecewiseLinear: breakpoints must be strictly increasing");
      }
    }
  }

  [[nodiscard]] bool empty() const { return start_values_.empty(); }
  [[nodiscard]] std::span<const double> breakpoints() const {
    return breakpoints_;
  }
  [[nodiscard]] std::span<const double> start_values() const {
    return start_values_;
  }
  [[nodiscard]] std::span<const double> slopes() const { return slopes_; }

  [[nodiscard]] double operator()(double t) const {
    if (empty() || t < breakpoints_.front() || t >= breakpoints_.back()) {
      return 0.0;
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return start_values_[k] + slopes_[k] * (t - breakpoints_[k]);
  }

  /// Exact integral, segment by segment.
  [[nodiscard]] double integral() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < start_values_.size(); ++k) {
      const double len = breakpoints_[k + 1] - breakpoints_[k];
      sum += len * (start_values_[k] + 0.5 * slopes_[k] * len);
    }
    return sum;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> start_values_;
  std::vector<double> slopes_;
};

}  // namespace sharedres
