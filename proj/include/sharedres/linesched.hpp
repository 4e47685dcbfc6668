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

// Line schedules: primal-dual pairs of the continuous completion-time LP
// obtained by prioritising jobs along their dual lines d_j(t) = a_j - t/v_j.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharedres/core.hpp"

namespace sharedres {

/// One non-negative priority intercept a_j per job.
using AlphaVector = std::vector<double>;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  [[nodiscard]] double residual() const { return residual_; }

 private:
  double residual_;
};

/// d_j(t) = a_j - t / v_j.
inline double dual_line(const Job& job, double alpha_j, double t) {
  return alpha_j - t / job.volume();
}

struct LineSchedule {
  JobSet jobs;
  AlphaVector alpha;
  Schedule schedule;
  std::vector<PiecewiseLinear> beta;
  PiecewiseLinear gamma;
  std::vector<double> volumes;  // v̄_j = int R_j
  std::vector<double> grid;     // shared breakpoints of R, beta and gamma
};

namespace detail {

inline constexpr double kExhaustedTol = 1e-12;

inline void require_line_inputs(const JobSet& jobs, std::span<const double> alpha) {
  if (alpha.size() != jobs.size()) {
    throw std::invalid_argument("line schedule: alpha has wrong length");
  }
  if (!jobs.non_degenerate()) {
    throw std::invalid_argument(
        "line schedule: job volumes must be pairwise distinct");
  }
  for (double a : alpha) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("line schedule: alpha must be finite and >= 0");
    }
  }
}

/// Every time at which the priority order or the sign of a dual line can
/// change: 0, the zeros a_j v_j and all pairwise crossings before the last
/// zero.
inline std::vector<double> line_events(const JobSet& jobs,
                                       std::span<const double> alpha) {
  const std::size_t n = jobs.size();
  double tmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    tmax = std::max(tmax, alpha[j] * jobs[j].volume());
  }
  std::vector<double> ev{0.0};
  if (tmax <= 0.0) return ev;
  for (std::size_t j = 0; j < n; ++j) {
    const double z = alpha[j] * jobs[j].volume();
    if (z > 0.0) ev.push_back(z);
    for (std::size_t k = j + 1; k < n; ++k) {
      const double t = (alpha[j] - alpha[k]) /
                       (1.0 / jobs[j].volume() - 1.0 / jobs[k].volume());
      if (t > 0.0 && t < tmax) ev.push_back(t);
    }
  }
  std::sort(ev.begin(), ev.end());
  const double eps = kBreakpointMergeRel * tmax;
  std::vector<double> out{0.0};
  for (double t : ev) {
    if (t - out.back() > eps) out.push_back(t);
  }
  if (out.back() < tmax) out.back() = tmax;
  return out;
}

/// Walks the intervals between consecutive events. For each one, `visit`
/// receives (begin, end, rates, order, count) where order[0..count) are the
/// jobs with d_j > 0 in descending priority and rates[j] is R_j there.
template <class Visit>
void sweep_lines(const JobSet& jobs, std::span<const double> alpha,
                 Visit&& visit) {
  const std::size_t n = jobs.size();
  const auto events = line_events(jobs, alpha);
  std::vector<double> rates(n, 0.0);
  std::vector<double> height(n, 0.0);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t k = 0; k + 1 < events.size(); ++k) {
    const double begin = events[k];
    const double end = events[k + 1];
    const double mid = 0.5 * (begin + end);
    order.clear();
    for (std::size_t j = 0; j < n; ++j) {
      rates[j] = 0.0;
      height[j] = dual_line(jobs[j], alpha[j], mid);
      if (height[j] > 0.0) order.push_back(j);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (height[a] != height[b]) return height[a] > height[b];
      return jobs[a].volume() > jobs[b].volume();
    });
    double remaining = 1.0;
    for (std::size_t j : order) {
      const double give = std::max(0.0, std::min(jobs[j].requirement(), remaining));
      rates[j] = give;
      remaining -= give;
    }
    visit(begin, end, std::span<const double>(rates),
          std::span<const std::size_t>(order), remaining);
  }
}

}  // namespace detail

/// v(a): the volume each job receives in the line schedule of `alpha`.
inline std::vector<double> scheduled_volumes(const JobSet& jobs,
                                             std::span<const double> alpha) {
  detail::require_line_inputs(jobs, alpha);
  std::vector<double> vol(jobs.size(), 0.0);
  detail::sweep_lines(jobs, alpha,
                      [&](double b, double e, std::span<const double> rates,
                          std::span<const std::size_t> order, double) {
                        for (std::size_t j : order) vol[j] += rates[j] * (e - b);
                      });
  return vol;
}

/// Builds the line schedule (R, a, beta, gamma, v̄) of `alpha`.
///
/// Within each interval jobs with d_j > 0 take min(r_j, what is left) in
/// descending order of d_j (ties: larger volume first). gamma follows the
/// lowest scheduled job's dual line while the resource is exhausted and is 0
/// otherwise; beta_j = max(0, d_j - gamma).
inline LineSchedule build_line_schedule(const JobSet& jobs,
                                        const AlphaVector& alpha) {
  detail::require_line_inputs(jobs, alpha);
  const std::size_t n = jobs.size();
  LineSchedule ls;
  ls.jobs = jobs;
  ls.alpha = alpha;
  std::vector<std::vector<double>> rate_cols(n);
  std::vector<std::vector<double>> beta_start(n), beta_slope(n);
  std::vector<double> gamma_start, gamma_slope;
  ls.grid.push_back(0.0);
  detail::sweep_lines(
      jobs, alpha,
      [&](double b, double e, std::span<const double> rates,
          std::span<const std::size_t> order, double remaining) {
        ls.grid.push_back(e);
        double g0 = 0.0;
        double gs = 0.0;
        if (!order.empty() && remaining <= detail::kExhaustedTol) {
          std::size_t last = order.front();
          for (std::size_t j : order) {
            if (rates[j] > 0.0) last = j;
          }
          g0 = std::max(0.0, dual_line(jobs[last], alpha[last], b));
          gs = -1.0 / jobs[last].volume();
        }
        gamma_start.push_back(g0);
        gamma_slope.push_back(gs);
        const double mid = 0.5 * (b + e);
        for (std::size_t j = 0; j < n; ++j) {
          rate_cols[j].push_back(rates[j]);
          const double d_mid = dual_line(jobs[j], alpha[j], mid);
          const double g_mid = g0 + gs * (mid - b);
          if (d_mid - g_mid > 0.0) {
            beta_start[j].push_back(dual_line(jobs[j], alpha[j], b) - g0);
            beta_slope[j].push_back(-1.0 / jobs[j].volume() - gs);
          } else {
            beta_start[j].push_back(0.0);
            beta_slope[j].push_back(0.0);
          }
        }
      });
  std::vector<StepFunction> assignments;
  assignments.reserve(n);
  if (ls.grid.size() == 1) ls.grid.clear();
  for (std::size_t j = 0; j < n; ++j) {
    if (ls.grid.empty()) {
      assignments.emplace_back();
      ls.beta.emplace_back();
    } else {
      assignments.emplace_back(ls.grid, rate_cols[j]);
      ls.beta.emplace_back(ls.grid, beta_start[j], beta_slope[j]);
    }
  }
  if (!ls.grid.empty()) ls.gamma = PiecewiseLinear(ls.grid, gamma_start, gamma_slope);
  ls.schedule = Schedule(std::move(assignments));
  ls.volumes.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ls.volumes.push_back(ls.schedule[j].integral());
  }
  return ls;
}

namespace detail {

/// Solves the dense n x n system m x = rhs by Gaussian elimination with
/// partial pivoting; false if m is (numerically) singular.
inline bool solve_dense(std::vector<double> m, std::vector<double>& rhs,
                        std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    }
    if (std::abs(m[piv * n + c]) < 1e-14) return false;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
      std::swap(rhs[c], rhs[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r * n + c] / m[c * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    double acc = rhs[c];
    for (std::size_t k = c + 1; k < n; ++k) acc -= m[c * n + k] * rhs[k];
    rhs[c] = acc / m[c * n + c];
  }
  return true;
}

}  // namespace detail

/// Finds a with v(a) = targets by the monotone fixed-point iteration: starting
/// from a = 0, each sweep raises every a_j (largest target first, others
/// fixed) until job j alone would receive its target.
///
/// a_j -> v_j(a) is continuous, non-decreasing and piecewise linear (all
/// crossing times move linearly in a_j), so each one-dimensional step is a
/// bracketed Illinois secant search, exact once it lands on the final linear
/// piece. After every sweep a Newton step on the full system (Jacobian by
/// forward differences) is tried and kept only if it lowers the residual.
/// Stops once max_j |v_j(a) - targets_j| <= vol_tol.
inline AlphaVector solve_alpha(const JobSet& jobs,
                               std::span<const double> targets,
                               double vol_tol = 1e-9, int max_iters = 10000) {
  const std::size_t n = jobs.size();
  if (targets.size() != n) {
    throw std::invalid_argument("solve_alpha: targets have wrong length");
  }
  if (!jobs.non_degenerate()) {
    throw std::invalid_argument(
        "solve_alpha: job volumes must be pairwise distinct");
  }
  for (double t : targets) {
    if (!(t > 0.0)) throw std::invalid_argument("solve_alpha: targets must be > 0");
  }
  AlphaVector alpha(n, 0.0);
  if (n == 0) return alpha;
  const double total_target = std::accumulate(targets.begin(), targets.end(), 0.0);
  const double rmin = jobs.min_requirement();
  std::vector<std::size_t> sweep(n);
  std::iota(sweep.begin(), sweep.end(), std::size_t{0});
  std::stable_sort(sweep.begin(), sweep.end(), [&](std::size_t a, std::size_t b) {
    return targets[a] > targets[b];
  });
  auto residual_of = [&](const std::vector<double>& vol) {
    double res = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      res = std::max(res, std::abs(vol[j] - targets[j]));
    }
    return res;
  };
  const double inner_tol = 1e-3 * vol_tol;

  auto raise = [&](std::size_t j) {
    auto f = [&](double a) {
      alpha[j] = a;
      return scheduled_volumes(jobs, alpha)[j] - targets[j];
    };
    const double start = alpha[j];
    const double f_start = f(start);
    if (std::abs(f_start) <= inner_tol) return;
    double lo = 0.0, hi = 0.0, flo = 0.0, fhi = 0.0;
    if (f_start < 0.0) {
      lo = start;
      flo = f_start;
      hi = std::max(start, total_target / (jobs[j].volume() * rmin) + 1.0);
      fhi = f(hi);
      for (int grow = 0; fhi < 0.0 && grow < 60; ++grow) {
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = f(hi);
      }
    } else {
      lo = 0.0;
      flo = -targets[j];
      hi = start;
      fhi = f_start;
    }
    double best = f_start < 0.0 ? lo : hi;
    double best_f = f_start < 0.0 ? flo : fhi;
    int side = 0;
    for (int it = 0; it < 200; ++it) {
      double x = (fhi - flo) > 0.0 ? (lo * fhi - hi * flo) / (fhi - flo)
                                   : 0.5 * (lo + hi);
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
      const double fx = f(x);
      if (std::abs(fx) < std::abs(best_f)) {
        best = x;
        best_f = fx;
      }
      if (std::abs(fx) <= inner_tol || hi - lo <= 1e-15 * hi) break;
      if (fx < 0.0) {
        lo = x;
        flo = fx;
        if (side == -1) fhi *= 0.5;
        side = -1;
      } else {
        hi = x;
        fhi = fx;
        if (side == 1) flo *= 0.5;
        side = 1;
      }
    }
    alpha[j] = best;
  };

  auto newton = [&](double residual) {
    std::vector<double> base = scheduled_volumes(jobs, alpha);
    std::vector<double> jac(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      const double h = 1e-7 * std::max(1.0, alpha[k]);
      AlphaVector probe = alpha;
      probe[k] += h;
      const auto vol = scheduled_volumes(jobs, probe);
      for (std::size_t j = 0; j < n; ++j) jac[j * n + k] = (vol[j] - base[j]) / h;
    }
    std::vector<double> step(n);
    for (std::size_t j = 0; j < n; ++j) step[j] = targets[j] - base[j];
    if (!detail::solve_dense(std::move(jac), step, n)) return residual;
    AlphaVector trial = alpha;
    for (std::size_t j = 0; j < n; ++j) trial[j] = std::max(0.0, trial[j] + step[j]);
    const double trial_res = residual_of(scheduled_volumes(jobs, trial));
    if (trial_res < residual) {
      alpha = std::move(trial);
      return trial_res;
    }
    return residual;
  };

  double residual = residual_of(scheduled_volumes(jobs, alpha));
  for (int iter = 0; iter < max_iters && residual > vol_tol; ++iter) {
    for (std::size_t j : sweep) raise(j);
    residual = residual_of(scheduled_volumes(jobs, alpha));
    if (residual > vol_tol) residual = newton(residual);
  }
  if (residual <= vol_tol) return alpha;
  throw ConvergenceError("solve_alpha: iteration limit reached", residual);
}

struct DualityQuantities {
  double P = 0.0;      // primal objective sum_j int t R_j / v_j
  double A = 0.0;      // sum_j a_j v̄_j
  double B = 0.0;      // sum_j r_j int beta_j
  double Gamma = 0.0;  // int gamma
};

inline DualityQuantities duality_quantities(const LineSchedule& ls) {
  DualityQuantities q;
  for (std::size_t j = 0; j < ls.jobs.size(); ++j) {
    q.P += ls.schedule[j].first_moment() / ls.jobs[j].volume();
    q.A += ls.alpha[j] * ls.volumes[j];
    q.B += ls.jobs[j].requirement() * ls.beta[j].integral();
  }
  q.Gamma = ls.gamma.integral();
  return q;
}

/// Largest violation of each continuous complementary-slackness condition and
/// of dual feasibility (gamma + beta_j >= d_j).
struct SlacknessReport {
  double alpha_sc = 0.0;
  double beta_sc = 0.0;
  double gamma_sc = 0.0;
  double r_sc = 0.0;
  double dual_feasibility = 0.0;

  [[nodiscard]] double max_violation() const {
    return std::max({alpha_sc, beta_sc, gamma_sc, r_sc, dual_feasibility});
  }
  [[nodiscard]] bool holds(double tol) const { return max_violation() <= tol; }
};

/// Evaluates the slackness conditions at every interval midpoint and just
/// inside both ends of every interval.
inline SlacknessReport check_slackness(const LineSchedule& ls) {
  SlacknessReport rep;
  const std::size_t n = ls.jobs.size();
  for (std::size_t j = 0; j < n; ++j) {
    rep.alpha_sc = std::max(
        rep.alpha_sc,
        std::abs(ls.alpha[j] * (ls.volumes[j] - ls.schedule[j].integral())));
  }
  std::vector<double> probes;
  for (std::size_t k = 0; k + 1 < ls.grid.size(); ++k) {
    const double a = ls.grid[k];
    const double b = ls.grid[k + 1];
    const double eps = std::min(1e-9 * std::max(1.0, b), 0.25 * (b - a));
    probes.push_back(0.5 * (a + b));
    probes.push_back(a + eps);
    probes.push_back(b - eps);
  }
  // Beyond the grid every dual line is non-positive and nothing runs.
  if (!ls.grid.empty()) probes.push_back(ls.grid.back() * (1.0 + 1e-9) + 1e-9);
  for (double t : probes) {
    const double g = ls.gamma(t);
    double used = 0.0;
    for (std::size_t j = 0; j < n; ++j) used += ls.schedule[j](t);
    rep.gamma_sc = std::max(rep.gamma_sc, std::abs(g * (1.0 - used)));
    rep.dual_feasibility = std::max(rep.dual_feasibility, -g);
    for (std::size_t j = 0; j < n; ++j) {
      const double r = ls.schedule[j](t);
      const double b = ls.beta[j](t);
      const double d = dual_line(ls.jobs[j], ls.alpha[j], t);
      rep.beta_sc =
          std::max(rep.beta_sc, std::abs(b * (ls.jobs[j].requirement() - r)));
      rep.r_sc = std::max(rep.r_sc, std::abs(r * (d - b - g)));
      rep.dual_feasibility = std::max({rep.dual_feasibility, d - g - b, -b});
    }
  }
  return rep;
}

/// sum_j R_j(t) / v_j.
inline double cost_rate(const LineSchedule& ls, double t) {
  double c = 0.0;
  for (std::size_t j = 0; j < ls.jobs.size(); ++j) {
    c += ls.schedule[j](t) / ls.jobs[j].volume();
  }
  return c;
}

}  // namespace sharedres
