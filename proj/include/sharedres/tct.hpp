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

// Total completion time: Greedy, lower bounds, exact line schedules (LS), the
// LP-based LSApprox pipeline and the best-of-both combination.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharedres/core.hpp"
#include "sharedres/linesched.hpp"
#include "sharedres/lp.hpp"

namespace sharedres {

/// Jobs in ascending volume (ties by id); each gets
/// min(r_j, 1 - usage of earlier jobs) until its volume is done.
inline Schedule greedy(const JobSet& jobs) {
  const std::size_t n = jobs.size();
  std::vector<StepFunction> out(n);
  StepFunction usage;
  for (std::size_t j : jobs.ascending_volume_order()) {
    const double r = jobs[j].requirement();
    double left = jobs[j].volume();
    std::vector<double> bps{0.0};
    std::vector<double> vals;
    auto ub = usage.breakpoints();
    auto uv = usage.values();
    for (std::size_t k = 0; k < uv.size() && left > 0.0; ++k) {
      const double avail = std::clamp(1.0 - uv[k], 0.0, r);
      const double len = ub[k + 1] - ub[k];
      if (avail > 0.0 && avail * len >= left) {
        vals.push_back(avail);
        bps.push_back(ub[k] + left / avail);
        left = 0.0;
        break;
      }
      vals.push_back(avail);
      bps.push_back(ub[k + 1]);
      left -= avail * len;
    }
    if (left > 0.0) {
      vals.push_back(r);
      bps.push_back(bps.back() + left / r);
    }
    out[j] = StepFunction(std::move(bps), std::move(vals));
    usage = usage + out[j];
  }
  return Schedule(std::move(out));
}

struct Bounds {
  double c_a = 0.0;  // SPT value with unit requirements
  double c_l = 0.0;  // sum of processing times
  std::optional<double> lb3;  // fractional optimum (stand-in) + c_l / 2

  [[nodiscard]] double best() const {
    return std::max({c_a, c_l, lb3.value_or(0.0)});
  }
};

inline Bounds lower_bounds(const JobSet& jobs,
                           std::optional<double> fractional_opt = {}) {
  Bounds b;
  double prefix = 0.0;
  for (std::size_t j : jobs.ascending_volume_order()) {
    prefix += jobs[j].volume();
    b.c_a += prefix;
    b.c_l += jobs[j].processing_time();
  }
  if (fractional_opt) b.lb3 = *fractional_opt + 0.5 * b.c_l;
  return b;
}

struct LsResult {
  LineSchedule line;
  DualityQuantities duality;

  [[nodiscard]] const Schedule& schedule() const { return line.schedule; }
  [[nodiscard]] const AlphaVector& alpha() const { return line.alpha; }
};

/// The line schedule whose volumes equal v (fixed-point alpha).
inline LsResult ls_exact(const JobSet& jobs, double vol_tol = 1e-9) {
  std::vector<double> targets;
  for (const Job& j : jobs) targets.push_back(j.volume());
  LsResult res;
  res.line = build_line_schedule(jobs, solve_alpha(jobs, targets, vol_tol));
  res.duality = duality_quantities(res.line);
  return res;
}

struct Subdivision {
  std::vector<std::size_t> light;
  std::vector<std::size_t> short_heavy;
  std::vector<std::size_t> long_heavy;
  double mu = 0.0;
};

inline Subdivision subdivide(const JobSet& jobs, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw std::invalid_argument("subdivide: mu must lie in (0, 1)");
  }
  Subdivision s;
  s.mu = mu;
  const double n = static_cast<double>(jobs.size());
  const double p_max = jobs.max_processing_time();
  const double thr = mu / n;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    if (job.requirement() <= thr) {
      s.light.push_back(j);
    } else if (job.processing_time() <= thr * thr * p_max) {
      s.short_heavy.push_back(j);
    } else {
      s.long_heavy.push_back(j);
    }
  }
  return s;
}

namespace detail {

/// Earliest t with int_0^t f >= v (the support end if f never gets there).
inline double time_of_volume(const StepFunction& f, double v) {
  auto bps = f.breakpoints();
  auto vals = f.values();
  double acc = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const double piece = vals[k] * (bps[k + 1] - bps[k]);
    if (vals[k] > 0.0 && acc + piece >= v) {
      return std::min(bps[k + 1], bps[k] + (v - acc) / vals[k]);
    }
    acc += piece;
  }
  return f.support_end();
}

}  // namespace detail

struct LsApproxParams {
  double epsilon = 0.5;
  double kappa = 1.0 / 20.0;
  std::optional<double> mu_override;
  std::optional<double> delta_override;
  std::optional<double> horizon_override;
  /// Slot count used when no slot width is given: delta = T / slots.
  std::size_t default_slots = 1024;

  /// kappa * epsilon (or the override) rounded down to 1/k, k integer.
  [[nodiscard]] double mu() const {
    const double raw = mu_override.value_or(kappa * epsilon);
    if (!(raw > 0.0 && raw < 1.0)) {
      throw std::invalid_argument("LsApproxParams: mu must lie in (0, 1)");
    }
    return 1.0 / std::ceil(1.0 / raw - 1e-9);
  }
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error("lsapprox [" + stage + "]: " + what),
        stage_(std::move(stage)) {}
  [[nodiscard]] const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct LsApproxResult {
  Schedule schedule;
  Subdivision subdivision;
  double mu = 0.0;
  double horizon = 0.0;
  double delta = 0.0;
  double guarantee_delta = 0.0;  // T (mu/n)^6, reported only
  double stretch = 1.0;          // s = max v_j / v̄_j
  double lp_objective = 0.0;
  AlphaVector alpha;  // over the long-heavy jobs, in subdivision order
};

inline LsApproxResult lsapprox(const JobSet& jobs,
                               const LsApproxParams& params = {}) {
  LsApproxResult res;
  const std::size_t n = jobs.size();
  res.mu = params.mu();
  res.subdivision = subdivide(jobs, res.mu);
  std::vector<StepFunction> out(n);
  const double mu = res.mu;
  const double nd = static_cast<double>(n);
  res.horizon = params.horizon_override.value_or(nd * jobs.max_processing_time());
  res.delta = params.delta_override.value_or(
      res.horizon / static_cast<double>(params.default_slots));
  res.guarantee_delta = res.horizon * std::pow(mu / std::max(nd, 1.0), 6.0);

  const auto& lh = res.subdivision.long_heavy;
  if (!lh.empty()) {
    std::vector<Job> sub;
    for (std::size_t j : lh) sub.push_back(jobs[j]);
    const JobSet heavy = perturb_degenerate(JobSet(std::move(sub)));
    LpSolution lp;
    try {
      const LpInstance inst = build_discretized_lp(heavy, res.horizon, res.delta);
      lp = solve_lp(inst);
    } catch (const std::exception& e) {
      throw PipelineError("lp", e.what());
    }
    res.lp_objective = lp.objective;
    res.alpha = lp.alpha;
    LineSchedule ls;
    try {
      ls = build_line_schedule(heavy, lp.alpha);
    } catch (const std::exception& e) {
      throw PipelineError("line-schedule", e.what());
    }
    for (std::size_t k = 0; k < heavy.size(); ++k) {
      if (!(ls.volumes[k] > 0.0)) {
        throw PipelineError("line-schedule",
                            "dual alpha schedules no volume for a job");
      }
      res.stretch = std::max(res.stretch, heavy[k].volume() / ls.volumes[k]);
    }
    for (std::size_t k = 0; k < heavy.size(); ++k) {
      // Stretching by s over-delivers for all but the tightest job; each job
      // is cut off once it has received its volume.
      const StepFunction f = ls.schedule[k]
                                 .stretched(res.stretch)
                                 .scaled(1.0 - mu)
                                 .stretched(1.0 / (1.0 - mu));
      out[lh[k]] = f.truncated(detail::time_of_volume(f, jobs[lh[k]].volume()));
    }
  }
  const double rate_cap = mu / nd;
  auto pack = [&](std::size_t j) {
    const double rate = std::min(rate_cap, jobs[j].requirement());
    out[j] = StepFunction::constant(rate, 0.0, jobs[j].volume() / rate);
  };
  for (std::size_t j : res.subdivision.light) pack(j);
  for (std::size_t j : res.subdivision.short_heavy) pack(j);
  res.schedule = Schedule(std::move(out));
  return res;
}

struct BestReport {
  std::string winner;  // "greedy" or "ls"
  double greedy_tct = 0.0;
  std::optional<double> ls_tct;
  std::optional<double> ls_ftct;
  std::optional<std::string> ls_error;
  bool perturbed = false;  // equal volumes were tie-broken for LS
  Bounds bounds;
};

struct BestResult {
  Schedule schedule;
  BestReport report;
};

/// Greedy versus a line schedule (exact LS, or LSApprox), whichever has the
/// smaller total completion time; ties go to Greedy. Equal volumes are
/// tie-broken with perturb_degenerate for the exact LS branch, which the
/// report records.
inline BestResult best_schedule(const JobSet& jobs,
                                const LsApproxParams& params = {},
                                bool use_exact_ls = true,
                                double vol_tol = 1e-9) {
  BestResult res;
  Schedule g = greedy(jobs);
  res.report.greedy_tct = total_completion_time(jobs, g);
  std::optional<Schedule> ls;
  try {
    if (use_exact_ls) {
      res.report.perturbed = !jobs.non_degenerate();
      ls = ls_exact(perturb_degenerate(jobs), vol_tol).schedule();
    } else {
      ls = lsapprox(jobs, params).schedule;
    }
  } catch (const std::exception& e) {
    res.report.ls_error = e.what();
  }
  std::optional<double> ftct;
  if (ls) {
    res.report.ls_tct = total_completion_time(jobs, *ls);
    ftct = fractional_completion_time(jobs, *ls).total;
    res.report.ls_ftct = ftct;
  }
  res.report.bounds = lower_bounds(jobs, ftct);
  if (ls && *res.report.ls_tct < res.report.greedy_tct) {
    res.report.winner = "ls";
    res.schedule = std::move(*ls);
  } else {
    res.report.winner = "greedy";
    res.schedule = std::move(g);
  }
  return res;
}

}  // namespace sharedres
