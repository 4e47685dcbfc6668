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

// Makespan minimization: the offline optimum, water-filling augmentation and
// the online WaterFill algorithm, universal schedules and the extendability
// test, plus the adversarial job family that rules out any ratio below
// e/(e-1).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "sharedres/core.hpp"

namespace sharedres {

inline constexpr double kWaterfillRatio =
    std::numbers::e / (std::numbers::e - 1.0);

struct OptimalMakespan {
  double value = 0.0;
  Schedule schedule;
};

/// M*(J) = max(V(J), p_max). Every job runs at the constant rate v_j / M*,
/// so all of them finish exactly at M*.
inline OptimalMakespan optimal_makespan(const JobSet& jobs) {
  OptimalMakespan out;
  out.value = std::max(jobs.total_volume(), jobs.max_processing_time());
  std::vector<StepFunction> rates;
  rates.reserve(jobs.size());
  for (const auto& job : jobs) {
    rates.push_back(
        StepFunction::constant(job.volume() / out.value, 0.0, out.value));
  }
  out.schedule = Schedule(std::move(rates));
  return out;
}

struct WaterfillSuccess {
  StepFunction assignment;  // wl_{h*} on [0, C)
  double level = 0.0;       // h*
};

struct WaterfillFailure {
  double deficit = 0.0;
};

namespace detail {

struct Segment {
  double length;
  double usage;
};

/// Usage on [0, C) as (length, level) segments, zero-usage tail included.
inline std::vector<Segment> segments_before(const StepFunction& usage,
                                            double C) {
  std::vector<Segment> segs;
  auto bps = usage.breakpoints();
  auto vals = usage.values();
  double covered = 0.0;
  for (std::size_t k = 0; k < vals.size() && bps[k] < C; ++k) {
    const double hi = std::min(bps[k + 1], C);
    segs.push_back({hi - bps[k], vals[k]});
    covered = hi;
  }
  if (covered < C) segs.push_back({C - covered, 0.0});
  return segs;
}

inline double poured_volume(std::span<const Segment> segs, double r, double h) {
  double v = 0.0;
  for (const auto& s : segs) {
    v += s.length * std::min(r, std::max(h - s.usage, 0.0));
  }
  return v;
}

/// Water-fill into a schedule given by its total usage.
inline std::variant<WaterfillSuccess, WaterfillFailure> pour(
    const StepFunction& usage, const Job& job, double C, double tol) {
  const double r = job.requirement();
  const double v = job.volume();
  if (!(C > 0.0)) return WaterfillFailure{v};
  const auto segs = segments_before(usage, C);
  const double capacity = poured_volume(segs, r, 1.0);
  if (capacity < v - tol * std::max(1.0, v)) {
    return WaterfillFailure{v - capacity};
  }
  // Volume as a function of h is piecewise linear with kinks at u and u + r.
  std::vector<double> levels{0.0, 1.0};
  for (const auto& s : segs) {
    if (s.usage < 1.0) levels.push_back(std::max(s.usage, 0.0));
    if (s.usage + r < 1.0) levels.push_back(std::max(s.usage + r, 0.0));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  double h = 1.0;
  if (poured_volume(segs, r, levels[hi]) >= v) {
    // Smallest candidate index with poured volume >= v.
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (poured_volume(segs, r, levels[mid]) >= v) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double f_lo = poured_volume(segs, r, levels[lo]);
    const double f_hi = poured_volume(segs, r, levels[hi]);
    h = f_lo >= v ? levels[lo]
                  : levels[lo] + (v - f_lo) / (f_hi - f_lo) *
                                     (levels[hi] - levels[lo]);
  }
  std::vector<double> bps{0.0};
  std::vector<double> vals;
  for (const auto& s : segs) {
    vals.push_back(std::min(r, std::max(h - s.usage, 0.0)));
    bps.push_back(bps.back() + s.length);
  }
  return WaterfillSuccess{StepFunction(std::move(bps), std::move(vals)), h};
}

}  // namespace detail

/// Outcome of augmenting a schedule by one job: the augmented schedule with
/// the chosen water level, or the volume that could not be placed.
struct WaterfillOutcome {
  std::variant<std::pair<Schedule, double>, WaterfillFailure> result;

  [[nodiscard]] bool success() const { return result.index() == 0; }
  [[nodiscard]] const Schedule& schedule() const {
    return std::get<0>(result).first;
  }
  [[nodiscard]] double level() const { return std::get<0>(result).second; }
  [[nodiscard]] double deficit() const {
    return std::get<1>(result).deficit;
  }
};

/// WFstep(R, job, C): give `job` the lowest water level h* with
/// int_0^C min(r, max(h* - R̄(t), 0)) dt = v, leaving R untouched.
inline WaterfillOutcome waterfill_step(const Schedule& sched, const Job& job,
                                       double C, double tol = kDefaultTol) {
  if (C < 0.0) throw std::invalid_argument("waterfill_step: C must be >= 0");
  auto poured = detail::pour(sched.total_usage(), job, C, tol);
  if (auto* fail = std::get_if<WaterfillFailure>(&poured)) {
    return {*fail};
  }
  auto& ok = std::get<WaterfillSuccess>(poured);
  Schedule out = sched;
  out.push_back(std::move(ok.assignment));
  return {std::make_pair(std::move(out), ok.level)};
}

struct OnlineFailure {
  std::size_t job = 0;  // 0-based index of the job that could not be placed
  double deficit = 0.0;
};

/// Record of an online WaterFill run. `schedule` holds the jobs placed before
/// any failure; prefix j of it is R^(j) because earlier assignments are never
/// changed.
struct OnlineRun {
  Schedule schedule;
  std::vector<double> targets;  // H_j = c * M*([j]) for every processed job
  std::vector<double> levels;   // h* per placed job
  std::optional<OnlineFailure> failure;

  [[nodiscard]] Schedule prefix(std::size_t count) const {
    return schedule.prefix(count);
  }
};

/// c-WaterFill: job j is water-filled with deadline H_j = c * M*([j]).
/// Stops at the first job that does not fit.
inline OnlineRun waterfill_online(const JobSet& jobs,
                                  double c = kWaterfillRatio,
                                  double tol = kDefaultTol) {
  if (!(c >= 1.0)) throw std::invalid_argument("waterfill_online: c < 1");
  OnlineRun run;
  StepFunction usage;
  double volume = 0.0;
  double pmax = 0.0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    volume += jobs[j].volume();
    pmax = std::max(pmax, jobs[j].processing_time());
    const double target = c * std::max(volume, pmax);
    run.targets.push_back(target);
    auto poured = detail::pour(usage, jobs[j], target, tol);
    if (auto* fail = std::get_if<WaterfillFailure>(&poured)) {
      run.failure = OnlineFailure{j, fail->deficit};
      break;
    }
    auto& ok = std::get<WaterfillSuccess>(poured);
    usage = usage + ok.assignment;
    run.levels.push_back(ok.level);
    run.schedule.push_back(std::move(ok.assignment));
  }
  return run;
}

/// U_V: the idealized one-job schedule of volume V that is just barely
/// e/(e-1)-extendable.
///
///   U_V(t) = 1                      for t < V/(e-1)
///          = 1 - ln(t (e-1) / V)    for V/(e-1) <= t < eV/(e-1)
///          = 0                      otherwise
struct UniversalSchedule {
  double volume = 0.0;

  [[nodiscard]] double plateau_end() const {
    return volume / (std::numbers::e - 1.0);
  }
  [[nodiscard]] double support_end() const {
    return std::numbers::e * plateau_end();
  }

  [[nodiscard]] double operator()(double t) const {
    if (volume <= 0.0 || t < 0.0) return 0.0;
    const double a = plateau_end();
    if (t < a) return 1.0;
    if (t < std::numbers::e * a) return 1.0 - std::log(t / a);
    return 0.0;
  }

  /// Level at which U_V(t) drops below y: t_y = a * e^(1-y).
  [[nodiscard]] double time_at_level(double y) const {
    return plateau_end() * std::exp(1.0 - y);
  }

  /// A^C_{U_V}(y) in closed form.
  [[nodiscard]] double upper_area(double C, double y) const {
    if (volume <= 0.0 || y >= 1.0 || C <= 0.0) return 0.0;
    const double a = plateau_end();
    const double end = std::min(C, time_at_level(std::max(y, 0.0)));
    const double ybar = std::max(y, 0.0);
    // Antiderivative of U(t) - y: (1-y) t on the plateau,
    // (2-y) t - t ln(t/a) on the logarithmic part.
    if (end <= a) return (1.0 - ybar) * end;
    const double plateau = (1.0 - ybar) * a;
    auto F = [&](double t) { return (2.0 - ybar) * t - t * std::log(t / a); };
    return plateau + F(end) - F(a);
  }
};

inline double universal_eval(const UniversalSchedule& u, double t) {
  return u(t);
}

/// A^inf_{U_V}(y) = (e^(1-y) - 1) / (e - 1) * V.
inline double universal_upper_area(double V, double y) {
  if (y >= 1.0) return 0.0;
  return (std::exp(1.0 - y) - 1.0) / (std::numbers::e - 1.0) * V;
}

/// R ⪯ U_V. The difference A^C_R(y) - A^C_U(y) is convex in C between
/// breakpoints of R (A_U is concave in C), so the C-extremes sit on R's grid
/// and at C = inf. In y the difference is concave between usage levels of R;
/// its interior maximum is where U's level-set length equals R's, at
/// y = 1 - ln(m / a) with m the measure of {t < C : R̄(t) > y}.
inline bool is_flatter(const StepFunction& usage, const UniversalSchedule& u,
                       double tol = kDefaultTol) {
  if (usage.empty()) return true;
  std::vector<double> grid(usage.breakpoints().begin(),
                           usage.breakpoints().end());
  std::vector<double> levels{0.0, 1.0};
  levels.insert(levels.end(), usage.values().begin(), usage.values().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const double a = u.plateau_end();
  auto violates = [&](double C, double y) {
    const double ar = upper_area(usage, C, y);
    const double au = u.upper_area(C, y);
    return ar > au + tol * std::max(1.0, au);
  };
  auto above_measure = [&](double C, double y) {
    double m = 0.0;
    auto bps = usage.breakpoints();
    auto vals = usage.values();
    for (std::size_t k = 0; k < vals.size() && bps[k] < C; ++k) {
      if (vals[k] > y) m += std::min(bps[k + 1], C) - bps[k];
    }
    return m;
  };
  grid.push_back(kInf);
  for (double C : grid) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (violates(C, levels[i])) return false;
      if (i + 1 < levels.size() && a > 0.0) {
        const double mid = 0.5 * (levels[i] + levels[i + 1]);
        const double m = above_measure(C, mid);
        if (m > 0.0) {
          const double ystar = 1.0 - std::log(m / a);
          if (ystar > levels[i] && ystar < levels[i + 1] &&
              violates(C, ystar)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool is_flatter(const Schedule& sched, const UniversalSchedule& u,
                       double tol = kDefaultTol) {
  return is_flatter(sched.total_usage(), u, tol);
}

namespace detail {

inline bool extendable(const std::function<double(double)>& area_above,
                       std::vector<double> levels, double volume, double pmax,
                       double c, int grid, double tol) {
  const double lo = (c - 1.0) / c;
  for (int k = 1; k <= grid; ++k) {
    levels.push_back(lo + (1.0 - lo) * static_cast<double>(k) / grid);
  }
  levels.push_back(1.0);
  for (double y : levels) {
    if (!(y > lo) || y > 1.0) continue;
    const double bound = (c - 1.0) * (1.0 - y) / y * std::max(volume, pmax * y);
    if (area_above(y) > bound + tol * std::max(1.0, bound)) return false;
  }
  return true;
}

}  // namespace detail

/// Extendability test: A^inf_R(y) <= (c-1)(1-y)/y * max(V, p_max y) for all
/// y in ((c-1)/c, 1], checked at every usage level of R plus `grid` uniform
/// samples.
inline bool extendability_check(const Schedule& sched, const JobSet& jobs,
                                double c, int grid = 1000,
                                double tol = kDefaultTol) {
  if (!(c > 1.0)) throw std::invalid_argument("extendability_check: c <= 1");
  const StepFunction usage = sched.total_usage();
  std::vector<double> levels(usage.values().begin(), usage.values().end());
  return detail::extendable(
      [&](double y) { return upper_area(usage, kInf, y); }, std::move(levels),
      jobs.total_volume(), jobs.max_processing_time(), c, grid, tol);
}

/// Same test for U_V read as a schedule of one job (V, 1).
inline bool extendability_check(const UniversalSchedule& u, double c,
                                int grid = 1000, double tol = kDefaultTol) {
  if (!(c > 1.0)) throw std::invalid_argument("extendability_check: c <= 1");
  return detail::extendable(
      [&](double y) { return universal_upper_area(u.volume, y); }, {},
      u.volume, u.volume, c, grid, tol);
}

/// Jobs j = 1..n with v_j = 1/n and r_j = 1/j; M*([j]) = j/n.
inline JobSet adversarial_instance(std::size_t n) {
  if (n == 0) throw std::invalid_argument("adversarial_instance: n must be >= 1");
  JobSet jobs;
  for (std::size_t j = 1; j <= n; ++j) {
    jobs.push_back(Job(1.0 / static_cast<double>(n),
                       1.0 / static_cast<double>(j)));
  }
  return jobs;
}

}  // namespace sharedres
