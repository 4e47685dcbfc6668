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
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharedres/step_function.hpp"

namespace sharedres {

/// Default absolute tolerance on resource values; volumes and times use it
/// relative to their own scale.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A job that needs `volume` resource-time units and may use at most
/// `requirement` of the unit resource at any instant.
class Job {
 public:
  Job(double volume, double requirement)
      : volume_(volume), requirement_(requirement) {
    if (!(volume > 0.0) || !std::isfinite(volume)) {
      throw std::invalid_argument("Job: volume must be positive and finite");
    }
    if (!(requirement > 0.0) || !(requirement <= 1.0)) {
      throw std::invalid_argument("Job: requirement must lie in (0, 1]");
    }
  }

  [[nodiscard]] double volume() const { return volume_; }
  [[nodiscard]] double requirement() const { return requirement_; }
  /// Shortest possible duration, v / r.
  [[nodiscard]] double processing_time() const {
    return volume_ / requirement_;
  }

  friend bool operator==(const Job&, const Job&) = default;

 private:
  double volume_;
  double requirement_;
};

/// Ordered list of jobs; the position is the job id.
class JobSet {
 public:
  JobSet() = default;
  explicit JobSet(std::vector<Job> jobs) : jobs_(std::move(jobs)) {}
  JobSet(std::initializer_list<Job> jobs) : jobs_(jobs) {}

  [[nodiscard]] std::size_t size() const { return jobs_.size(); }
  [[nodiscard]] bool empty() const { return jobs_.empty(); }
  [[nodiscard]] const Job& operator[](std::size_t j) const { return jobs_[j]; }
  [[nodiscard]] auto begin() const { return jobs_.begin(); }
  [[nodiscard]] auto end() const { return jobs_.end(); }
  [[nodiscard]] std::span<const Job> jobs() const { return jobs_; }

  void push_back(Job job) { jobs_.push_back(job); }

  [[nodiscard]] double total_volume() const {
    double v = 0.0;
    for (const auto& j : jobs_) v += j.volume();
    return v;
  }

  [[nodiscard]] double max_processing_time() const {
    double p = 0.0;
    for (const auto& j : jobs_) p = std::max(p, j.processing_time());
    return p;
  }

  [[nodiscard]] double min_requirement() const {
    double r = 1.0;
    for (const auto& j : jobs_) r = std::min(r, j.requirement());
    return r;
  }

  /// True when all volumes are pairwise distinct.
  [[nodiscard]] bool non_degenerate() const {
    std::vector<double> v;
    v.reserve(jobs_.size());
    for (const auto& j : jobs_) v.push_back(j.volume());
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }

  /// The first `count` jobs.
  [[nodiscard]] JobSet prefix(std::size_t count) const {
    return JobSet(std::vector<Job>(
        jobs_.begin(),
        jobs_.begin() + static_cast<long>(std::min(count, jobs_.size()))));
  }

  /// Job ids sorted by ascending volume, ties by id.
  [[nodiscard]] std::vector<std::size_t> ascending_volume_order() const {
    std::vector<std::size_t> order(jobs_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return jobs_[a].volume() < jobs_[b].volume();
                     });
    return order;
  }

  friend bool operator==(const JobSet&, const JobSet&) = default;

 private:
  std::vector<Job> jobs_;
};

/// Breaks volume ties: within each group of equal volumes the k-th job (by
/// id, k = 0, 1, ...) gets its volume multiplied by 1 + 1e-12 * k. Returns
/// the input unchanged when it is already non-degenerate.
inline JobSet perturb_degenerate(const JobSet& jobs) {
  if (jobs.non_degenerate()) return jobs;
  std::vector<Job> out(jobs.begin(), jobs.end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (jobs[i].volume() == jobs[j].volume()) ++rank;
    }
    if (rank > 0) {
      out[j] = Job(jobs[j].volume() * (1.0 + 1e-12 * static_cast<double>(rank)),
                   jobs[j].requirement());
    }
  }
  return JobSet(std::move(out));
}

/// Resource assignment R_j(t) for every job.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<StepFunction> assignments)
      : assignments_(std::move(assignments)) {
    for (const auto& a : assignments_) {
      if (a.min_value() < 0.0) {
        throw std::invalid_argument("Schedule: negative resource assignment");
      }
    }
  }

  [[nodiscard]] std::size_t size() const { return assignments_.size(); }
  [[nodiscard]] const StepFunction& operator[](std::size_t j) const {
    return assignments_[j];
  }
  [[nodiscard]] std::span<const StepFunction> assignments() const {
    return assignments_;
  }

  /// Total usage R̄(t) = sum_j R_j(t).
  [[nodiscard]] StepFunction total_usage() const { return sum(assignments_); }

  /// C_j = sup{t : R_j(t) > 0}.
  [[nodiscard]] double completion_time(std::size_t j) const {
    return assignments_[j].support_end();
  }

  [[nodiscard]] std::vector<double> completion_times() const {
    std::vector<double> c;
    c.reserve(assignments_.size());
    for (const auto& a : assignments_) c.push_back(a.support_end());
    return c;
  }

  /// Union of all breakpoints (sorted, deduplicated).
  [[nodiscard]] std::vector<double> common_breakpoints() const {
    std::vector<double> grid;
    for (const auto& a : assignments_) {
      grid.insert(grid.end(), a.breakpoints().begin(), a.breakpoints().end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
  }

  /// Schedule of the first `count` jobs.
  [[nodiscard]] Schedule prefix(std::size_t count) const {
    return Schedule(std::vector<StepFunction>(
        assignments_.begin(),
        assignments_.begin() +
            static_cast<long>(std::min(count, assignments_.size()))));
  }

  void push_back(StepFunction assignment) {
    if (assignment.min_value() < 0.0) {
      throw std::invalid_argument("Schedule: negative resource assignment");
    }
    assignments_.push_back(std::move(assignment));
  }

 private:
  std::vector<StepFunction> assignments_;
};

enum class ViolationKind { kOveruse, kRequirementExceeded, kVolumeDeficit };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOveruse:
      return "overuse";
    case ViolationKind::kRequirementExceeded:
      return "requirement-exceeded";
    case ViolationKind::kVolumeDeficit:
      return "volume-deficit";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> job;  // unset for overuse
  double begin = 0.0;              // time interval, unset for volume deficit
  double end = 0.0;
  double magnitude = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool feasible() const { return violations.empty(); }
};

/// Checks R_j <= r_j, sum_j R_j <= 1 and int R_j >= v_j. Resource clauses use
/// `tol` absolutely, the volume clause relative to max(1, v_j).
inline ValidationReport validate_schedule(const JobSet& jobs,
                                          const Schedule& sched,
                                          double tol = kDefaultTol) {
  if (jobs.size() != sched.size()) {
    throw std::invalid_argument(
        "validate_schedule: job and assignment counts differ");
  }
  ValidationReport report;
  const StepFunction total = sched.total_usage();
  auto bps = total.breakpoints();
  auto vals = total.values();
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] > 1.0 + tol) {
      report.violations.push_back({ViolationKind::kOveruse, std::nullopt,
                                   bps[k], bps[k + 1], vals[k] - 1.0});
    }
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const double r = jobs[j].requirement();
    auto jb = sched[j].breakpoints();
    auto jv = sched[j].values();
    for (std::size_t k = 0; k < jv.size(); ++k) {
      if (jv[k] > r + tol) {
        report.violations.push_back({ViolationKind::kRequirementExceeded, j,
                                     jb[k], jb[k + 1], jv[k] - r});
      }
    }
    const double deficit = jobs[j].volume() - sched[j].integral();
    if (deficit > tol * std::max(1.0, jobs[j].volume())) {
      report.violations.push_back(
          {ViolationKind::kVolumeDeficit, j, 0.0, 0.0, deficit});
    }
  }
  return report;
}

/// M(R) = max_j C_j(R); 0 for the empty schedule.
inline double makespan(const Schedule& sched) {
  double m = 0.0;
  for (const auto& a : sched.assignments()) m = std::max(m, a.support_end());
  return m;
}

/// C(R) = sum_j C_j(R).
inline double total_completion_time(const JobSet& jobs, const Schedule& sched) {
  if (jobs.size() != sched.size()) {
    throw std::invalid_argument(
        "total_completion_time: job and assignment counts differ");
  }
  double c = 0.0;
  for (const auto& a : sched.assignments()) c += a.support_end();
  return c;
}

struct FractionalCompletion {
  std::vector<double> per_job;
  double total = 0.0;
};

/// C^F_j(R) = int R_j(t) t / v_j dt, exactly on the step grid.
inline FractionalCompletion fractional_completion_time(const JobSet& jobs,
                                                       const Schedule& sched) {
  if (jobs.size() != sched.size()) {
    throw std::invalid_argument(
        "fractional_completion_time: job and assignment counts differ");
  }
  FractionalCompletion out;
  out.per_job.reserve(jobs.size());
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const double cf = sched[j].first_moment() / jobs[j].volume();
    out.per_job.push_back(cf);
    out.total += cf;
  }
  return out;
}

/// A^C(y) = int_0^C max(u(t) - y, 0) dt for a total-usage function u.
inline double upper_area(const StepFunction& usage, double C, double y) {
  double area = 0.0;
  auto bps = usage.breakpoints();
  auto vals = usage.values();
  for (std::size_t k = 0; k < vals.size() && bps[k] < C; ++k) {
    if (vals[k] <= y) continue;
    area += (vals[k] - y) * (std::min(bps[k + 1], C) - bps[k]);
  }
  return area;
}

/// Upper resource distribution A^C_R(y): total volume above height y before
/// time C.
inline double upper_resource_distribution(const Schedule& sched, double C,
                                          double y) {
  return upper_area(sched.total_usage(), C, y);
}

namespace detail {

/// A^C(y) of `usage` at every point of `grid` (sorted, containing all
/// breakpoints of `usage`).
inline std::vector<double> upper_area_profile(const StepFunction& usage,
                                              std::span<const double> grid,
                                              double y) {
  std::vector<double> out(grid.size(), 0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double u = usage(grid[k]);
    if (u > y) acc += (u - y) * (grid[k + 1] - grid[k]);
    out[k + 1] = acc;
  }
  return out;
}

inline std::vector<double> distinct_levels(std::span<const StepFunction> fs) {
  std::vector<double> ys{0.0, 1.0};
  for (const auto& f : fs) {
    ys.insert(ys.end(), f.values().begin(), f.values().end());
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

}  // namespace detail

/// R ⪯ S: A^C_R(y) <= A^C_S(y) + tol * max(1, A^C_S(y)) for all C, y. Both areas are piecewise
/// linear in C with kinks at breakpoints and convex piecewise linear in y with
/// kinks at usage levels, so checking the union grid is exact.
inline bool is_flatter(const StepFunction& r_usage,
                       const StepFunction& s_usage, double tol = kDefaultTol) {
  std::vector<double> grid;
  std::merge(r_usage.breakpoints().begin(), r_usage.breakpoints().end(),
             s_usage.breakpoints().begin(), s_usage.breakpoints().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) return true;
  const StepFunction both[] = {r_usage, s_usage};
  for (double y : detail::distinct_levels(both)) {
    auto ar = detail::upper_area_profile(r_usage, grid, y);
    auto as = detail::upper_area_profile(s_usage, grid, y);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (ar[k] > as[k] + tol * std::max(1.0, as[k])) return false;
    }
  }
  return true;
}

inline bool is_flatter(const Schedule& r, const Schedule& s,
                       double tol = kDefaultTol) {
  return is_flatter(r.total_usage(), s.total_usage(), tol);
}

}  // namespace sharedres
