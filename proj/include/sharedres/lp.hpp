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

// The time-slotted completion-time LP
//
//   min  sum_j (1/v_j) sum_i V_ji * m_i          m_i = i*delta - delta/2
//   s.t. sum_i V_ji >= target_j                  (alpha_j)
//        sum_j V_ji <= delta                     (gamma_i)
//        0 <= V_ji <= r_j * delta                (beta_ji)
//
// together with two exact solvers: a dense two-phase simplex (Bland's rule)
// for small instances and as a reference, and a successive-shortest-path
// transportation solver for the large slot counts used in practice. Both
// return optimal duals.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharedres/core.hpp"

namespace sharedres {

// ---------------------------------------------------------------------------
// Generic dense LP.

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LpRow {
  std::vector<std::pair<std::size_t, double>> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

/// min cost . x  subject to `rows` and x >= 0.
struct LinearProgram {
  std::vector<double> cost;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

struct SimplexResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  std::vector<double> duals;  // y_i = d(objective)/d(rhs_i)
  double objective = 0.0;
  long pivots = 0;
};

/// Two-phase tableau simplex with Bland's rule, which cannot cycle.
/// `max_pivots` is a safety net only.
inline SimplexResult solve_simplex(const LinearProgram& lp,
                                   long max_pivots = 200000,
                                   double tol = 1e-9) {
  const std::size_t n = lp.cost.size();
  const std::size_t m = lp.rows.size();
  SimplexResult res;
  std::vector<double> sign(m, 1.0);
  std::vector<RowSense> sense(m);
  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  for (std::size_t r = 0; r < m; ++r) {
    sense[r] = lp.rows[r].sense;
    if (lp.rows[r].rhs < 0.0) {
      sign[r] = -1.0;
      if (sense[r] == RowSense::kLessEqual) {
        sense[r] = RowSense::kGreaterEqual;
      } else if (sense[r] == RowSense::kGreaterEqual) {
        sense[r] = RowSense::kLessEqual;
      }
    }
    if (sense[r] != RowSense::kEqual) ++num_slack;
    if (sense[r] != RowSense::kLessEqual) ++num_art;
  }
  const std::size_t art0 = n + num_slack;
  const std::size_t cols = art0 + num_art;
  const std::size_t width = cols + 1;  // last column holds the rhs
  std::vector<double> tab(m * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return tab[r * width + c];
  };
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> home(m);  // column that was basic in row r at start
  {
    std::size_t s = n;
    std::size_t a = art0;
    for (std::size_t r = 0; r < m; ++r) {
      for (const auto& [var, coef] : lp.rows[r].terms) {
        if (var >= n) throw std::out_of_range("solve_simplex: bad variable");
        at(r, var) += sign[r] * coef;
      }
      at(r, cols) = sign[r] * lp.rows[r].rhs;
      if (sense[r] == RowSense::kLessEqual) {
        at(r, s) = 1.0;
        home[r] = s++;
      } else {
        if (sense[r] == RowSense::kGreaterEqual) at(r, s++) = -1.0;
        at(r, a) = 1.0;
        home[r] = a++;
      }
      basis[r] = home[r];
    }
  }
  std::vector<double> cost(cols, 0.0);
  std::vector<double> d(width, 0.0);  // reduced costs; d[cols] = -objective
  auto price = [&]() {
    for (std::size_t c = 0; c < width; ++c) d[c] = c < cols ? cost[c] : 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double cb = cost[basis[r]];
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) d[c] -= cb * at(r, c);
    }
  };
  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c < width; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    const double f = d[pc];
    if (f != 0.0) {
      for (std::size_t c = 0; c < width; ++c) d[c] -= f * at(pr, c);
      d[pc] = 0.0;
    }
    basis[pr] = pc;
    ++res.pivots;
  };
  // Returns kOptimal, kUnbounded or kIterationLimit.
  auto run = [&](std::size_t enter_limit) {
    while (true) {
      std::size_t enter = enter_limit;
      for (std::size_t c = 0; c < enter_limit; ++c) {
        if (d[c] < -tol) {
          enter = c;
          break;
        }
      }
      if (enter == enter_limit) return LpStatus::kOptimal;
      if (res.pivots >= max_pivots) return LpStatus::kIterationLimit;
      std::size_t leave = m;
      double best = kInf;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = at(r, enter);
        if (a <= tol) continue;
        const double ratio = at(r, cols) / a;
        if (ratio < best - tol ||
            (ratio <= best + tol && leave < m && basis[r] < basis[leave])) {
          if (ratio < best) best = ratio;
          leave = r;
        }
      }
      if (leave == m) return LpStatus::kUnbounded;
      pivot(leave, enter);
    }
  };

  // Phase 1: minimise the sum of artificials.
  for (std::size_t c = art0; c < cols; ++c) cost[c] = 1.0;
  price();
  LpStatus st = run(cols);
  if (st == LpStatus::kIterationLimit) {
    res.status = st;
    return res;
  }
  double rhs_scale = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    rhs_scale = std::max(rhs_scale, std::abs(lp.rows[r].rhs));
  }
  if (-d[cols] > tol * rhs_scale) {
    res.status = LpStatus::kInfeasible;
    return res;
  }
  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < art0) continue;
    for (std::size_t c = 0; c < art0; ++c) {
      if (std::abs(at(r, c)) > tol) {
        pivot(r, c);
        break;
      }
    }
  }

  // Phase 2.
  std::fill(cost.begin(), cost.end(), 0.0);
  std::copy(lp.cost.begin(), lp.cost.end(), cost.begin());
  price();
  st = run(art0);
  res.status = st;
  if (st != LpStatus::kOptimal) return res;
  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) res.x[basis[r]] = std::max(0.0, at(r, cols));
  }
  res.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) res.objective += lp.cost[j] * res.x[j];
  // The home column of row r is B^-1 e_r (times the row sign), and its cost
  // is zero in phase 2, so y_r = -d[home_r].
  res.duals.resize(m);
  for (std::size_t r = 0; r < m; ++r) res.duals[r] = -d[home[r]] * sign[r];
  return res;
}

/// Fixed-order plain-text dump: the objective row, then one line per
/// constraint.
inline void write_lp_dump(std::ostream& os, const LinearProgram& lp) {
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  os << "min:";
  for (std::size_t j = 0; j < lp.cost.size(); ++j) {
    if (lp.cost[j] != 0.0) os << ' ' << num(lp.cost[j]) << " x" << j;
  }
  os << '\n';
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    os << 'c' << r << ':';
    for (const auto& [var, coef] : lp.rows[r].terms) {
      os << ' ' << num(coef) << " x" << var;
    }
    switch (lp.rows[r].sense) {
      case RowSense::kLessEqual:
        os << " <= ";
        break;
      case RowSense::kGreaterEqual:
        os << " >= ";
        break;
      case RowSense::kEqual:
        os << " = ";
        break;
    }
    os << num(lp.rows[r].rhs) << '\n';
  }
}

// ---------------------------------------------------------------------------
// The slotted scheduling LP.

class LpError : public std::runtime_error {
 public:
  LpError(const std::string& what, LpStatus status)
      : std::runtime_error(what), status_(status) {}
  [[nodiscard]] LpStatus status() const { return status_; }

 private:
  LpStatus status_;
};

struct LpInstance {
  JobSet jobs;
  std::vector<double> targets;
  double horizon = 0.0;
  double delta = 0.0;
  std::size_t slots = 0;

  [[nodiscard]] std::size_t num_variables() const {
    return jobs.size() * slots;
  }
  /// Midpoint of 0-based slot i.
  [[nodiscard]] double midpoint(std::size_t i) const {
    return static_cast<double>(i + 1) * delta - 0.5 * delta;
  }
  [[nodiscard]] double cost(std::size_t j, std::size_t i) const {
    return midpoint(i) / jobs[j].volume();
  }
};

inline LpInstance build_discretized_lp(const JobSet& jobs,
                                       std::vector<double> targets,
                                       double horizon, double delta) {
  if (targets.size() != jobs.size()) {
    throw std::invalid_argument("build_discretized_lp: targets have wrong length");
  }
  for (double t : targets) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument("build_discretized_lp: targets must be >= 0");
    }
  }
  if (!(delta > 0.0) || !(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument(
        "build_discretized_lp: horizon and slot width must be > 0");
  }
  const double count = std::round(horizon / delta);
  if (count < 1.0 || std::abs(count * delta - horizon) > 1e-9 * horizon) {
    throw std::invalid_argument(
        "build_discretized_lp: slot width must divide the horizon");
  }
  LpInstance inst;
  inst.jobs = jobs;
  inst.targets = std::move(targets);
  inst.horizon = horizon;
  inst.delta = delta;
  inst.slots = static_cast<std::size_t>(count);
  return inst;
}

inline LpInstance build_discretized_lp(const JobSet& jobs, double horizon,
                                       double delta) {
  std::vector<double> targets;
  for (const Job& j : jobs) targets.push_back(j.volume());
  return build_discretized_lp(jobs, std::move(targets), horizon, delta);
}

namespace detail {

/// The slotted LP over the first `slots` slots as a generic LP. Variable
/// V_ji has index j * slots + i; rows are demand (n), capacity (slots), then
/// per-variable upper bounds.
inline LinearProgram slotted_program(const LpInstance& inst, std::size_t slots) {
  const std::size_t n = inst.jobs.size();
  LinearProgram lp;
  lp.cost.resize(n * slots);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < slots; ++i) lp.cost[j * slots + i] = inst.cost(j, i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    LpRow row{{}, RowSense::kGreaterEqual, inst.targets[j]};
    for (std::size_t i = 0; i < slots; ++i) row.terms.emplace_back(j * slots + i, 1.0);
    lp.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < slots; ++i) {
    LpRow row{{}, RowSense::kLessEqual, inst.delta};
    for (std::size_t j = 0; j < n; ++j) row.terms.emplace_back(j * slots + i, 1.0);
    lp.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < slots; ++i) {
      lp.rows.push_back({{{j * slots + i, 1.0}},
                         RowSense::kLessEqual,
                         inst.jobs[j].requirement() * inst.delta});
    }
  }
  return lp;
}

struct SlottedResult {
  bool feasible = false;
  std::vector<std::vector<double>> volume;  // [job][slot]
  std::vector<double> alpha;
  std::vector<std::vector<double>> beta;
  std::vector<double> gamma;
};

inline SlottedResult solve_slotted_simplex(const LpInstance& inst,
                                           std::size_t slots, long max_pivots) {
  const std::size_t n = inst.jobs.size();
  const LinearProgram lp = slotted_program(inst, slots);
  const SimplexResult sr = solve_simplex(lp, max_pivots);
  SlottedResult out;
  if (sr.status == LpStatus::kInfeasible) return out;
  if (sr.status != LpStatus::kOptimal) {
    throw LpError(std::string("solve_lp: simplex stopped: ") + to_string(sr.status),
                  sr.status);
  }
  out.feasible = true;
  out.volume.assign(n, std::vector<double>(slots, 0.0));
  out.beta.assign(n, std::vector<double>(slots, 0.0));
  out.alpha.assign(n, 0.0);
  out.gamma.assign(slots, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    out.alpha[j] = std::max(0.0, sr.duals[j]);
    for (std::size_t i = 0; i < slots; ++i) {
      out.volume[j][i] = sr.x[j * slots + i];
      out.beta[j][i] = std::max(0.0, -sr.duals[n + slots + j * slots + i]);
    }
  }
  for (std::size_t i = 0; i < slots; ++i) {
    out.gamma[i] = std::max(0.0, -sr.duals[n + i]);
  }
  return out;
}

/// Successive shortest paths on the bipartite network source -> job -> slot
/// -> sink (Dijkstra with node potentials). Optimal duals are read off the
/// final residual network: alpha_j and gamma_i are shortest distances to the
/// sink.
inline SlottedResult solve_slotted_transport(const LpInstance& inst,
                                             std::size_t slots) {
  const std::size_t n = inst.jobs.size();
  const double delta = inst.delta;
  const double eps = 1e-13 * delta;
  std::vector<std::vector<double>> x(n, std::vector<double>(slots, 0.0));
  std::vector<double> load(slots, 0.0);
  std::vector<double> rem(inst.targets);
  std::vector<double> cap(n);
  for (std::size_t j = 0; j < n; ++j) cap[j] = inst.jobs[j].requirement() * delta;
  double demand_scale = 0.0;
  for (double t : inst.targets) demand_scale = std::max(demand_scale, t);
  const double demand_eps = 1e-13 * std::max(demand_scale, delta);

  // Node ids: jobs [0, n), slots [n, n + slots), sink n + slots.
  const std::size_t sink = n + slots;
  const std::size_t nodes = sink + 1;
  std::vector<double> pot(nodes, 0.0);
  std::vector<double> dist(nodes);
  std::vector<std::size_t> pred(nodes);
  std::vector<char> done(nodes);
  using Item = std::pair<double, std::size_t>;

  SlottedResult out;
  while (true) {
    bool pending = false;
    for (std::size_t j = 0; j < n; ++j) pending |= rem[j] > demand_eps;
    if (!pending) break;
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    const std::size_t none = nodes;
    for (std::size_t j = 0; j < n; ++j) {
      if (rem[j] > demand_eps) {
        dist[j] = 0.0;
        pred[j] = none;
        heap.emplace(0.0, j);
      }
    }
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (done[u] || du > dist[u]) continue;
      done[u] = 1;
      if (u == sink) break;
      auto relax = [&](std::size_t v, double c) {
        const double nd = du + c + pot[u] - pot[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          pred[v] = u;
          heap.emplace(nd, v);
        }
      };
      if (u < n) {
        for (std::size_t i = 0; i < slots; ++i) {
          if (x[u][i] < cap[u] - eps && !done[n + i]) relax(n + i, inst.cost(u, i));
        }
      } else {
        const std::size_t i = u - n;
        if (load[i] < delta - eps) relax(sink, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          if (x[j][i] > eps && !done[j]) relax(j, -inst.cost(j, i));
        }
      }
    }
    if (!done[sink]) return out;  // infeasible
    const double dt = dist[sink];
    for (std::size_t v = 0; v < nodes; ++v) pot[v] += std::min(dist[v], dt);
    // Bottleneck along the path.
    double amount = delta - load[pred[sink] - n];
    std::size_t v = pred[sink];
    std::size_t start = v;
    while (v != none) {
      const std::size_t u = pred[v];
      if (u == none) {
        start = v;
        break;
      }
      if (u < n) {
        amount = std::min(amount, cap[u] - x[u][v - n]);
      } else {
        amount = std::min(amount, x[v][u - n]);
      }
      v = u;
    }
    amount = std::min(amount, rem[start]);
    v = pred[sink];
    load[v - n] += amount;
    while (pred[v] != none) {
      const std::size_t u = pred[v];
      if (u < n) {
        x[u][v - n] += amount;
      } else {
        x[v][u - n] -= amount;
      }
      v = u;
    }
    rem[start] -= amount;
    // Snap saturated values to avoid sub-ulp residual arcs.
    if (load[pred[sink] - n] > delta - eps) load[pred[sink] - n] = delta;
  }

  // Duals: D(u) = shortest distance from u to the sink in the residual
  // network. Simple paths alternate job and slot nodes, so 2n + 2 rounds of
  // Bellman-Ford suffice.
  std::vector<double> dj(n, kInf);
  std::vector<double> di(slots);
  for (std::size_t i = 0; i < slots; ++i) di[i] = load[i] < delta - eps ? 0.0 : kInf;
  bool changed = true;
  for (std::size_t round = 0; changed && round < 2 * n + 4; ++round) {
    changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < slots; ++i) {
        if (x[j][i] < cap[j] - eps && di[i] < kInf) {
          const double cand = inst.cost(j, i) + di[i];
          if (cand < dj[j] - 1e-15 * std::abs(cand)) {
            dj[j] = cand;
            changed = true;
          }
        }
      }
    }
    for (std::size_t i = 0; i < slots; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j][i] > eps && dj[j] < kInf) {
          const double cand = dj[j] - inst.cost(j, i);
          if (cand < di[i] - 1e-15 * std::abs(cand)) {
            di[i] = cand;
            changed = true;
          }
        }
      }
    }
  }
  out.feasible = true;
  out.gamma.assign(slots, 0.0);
  for (std::size_t i = 0; i < slots; ++i) {
    out.gamma[i] = di[i] < kInf ? std::max(0.0, di[i]) : 0.0;
  }
  out.alpha.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (dj[j] < kInf) {
      out.alpha[j] = std::max(0.0, dj[j]);
    } else {
      // Every slot saturated: any alpha_j >= max_i (c_ji + gamma_i) is
      // optimal; take the smallest.
      double a = 0.0;
      for (std::size_t i = 0; i < slots; ++i) {
        a = std::max(a, inst.cost(j, i) + out.gamma[i]);
      }
      out.alpha[j] = a;
    }
  }
  out.volume = std::move(x);
  out.beta.assign(n, std::vector<double>(slots, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < slots; ++i) {
      out.beta[j][i] =
          std::max(0.0, out.alpha[j] - inst.cost(j, i) - out.gamma[i]);
    }
  }
  return out;
}

}  // namespace detail

enum class LpEngine { kAuto, kSimplex, kTransport };

struct LpSolveOptions {
  LpEngine engine = LpEngine::kAuto;
  /// kAuto uses the dense simplex up to this many variables.
  std::size_t simplex_max_variables = 256;
  long max_pivots = 200000;
  /// Solve on a prefix of the slots first and certify the rest via the duals.
  bool truncate_horizon = true;
};

struct LpSolution {
  std::vector<std::vector<double>> volume;  // V_ji, [job][slot]
  double objective = 0.0;
  std::vector<double> alpha;
  std::vector<std::vector<double>> beta;  // [job][slot]
  std::vector<double> gamma;              // [slot]
  std::size_t solved_slots = 0;           // slots actually handed to the engine
  LpEngine engine = LpEngine::kAuto;
};

/// Optimal primal and dual solution of the slotted LP.
///
/// The horizon is solved on a growing prefix of K slots, starting from twice
/// a makespan lower bound. Zero volume and gamma on the omitted slots is
/// optimal as soon as alpha_j <= m_K / v_j for all j (then all omitted dual
/// constraints hold with beta = 0, since costs increase in i), otherwise K is
/// doubled.
inline LpSolution solve_lp(const LpInstance& inst,
                           const LpSolveOptions& opts = {}) {
  const std::size_t n = inst.jobs.size();
  LpSolution sol;
  sol.volume.assign(n, std::vector<double>(inst.slots, 0.0));
  sol.beta.assign(n, std::vector<double>(inst.slots, 0.0));
  sol.alpha.assign(n, 0.0);
  sol.gamma.assign(inst.slots, 0.0);
  double total = 0.0;
  double longest = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    total += inst.targets[j];
    longest = std::max(longest, inst.targets[j] / inst.jobs[j].requirement());
  }
  if (total == 0.0) return sol;
  if (total > inst.horizon * (1.0 + 1e-12) ||
      longest > inst.horizon * (1.0 + 1e-12)) {
    throw LpError("solve_lp: infeasible (targets exceed horizon capacity)",
                  LpStatus::kInfeasible);
  }
  std::size_t k = inst.slots;
  if (opts.truncate_horizon) {
    const double lb = std::max(total, longest);
    k = std::min(inst.slots,
                 static_cast<std::size_t>(std::ceil(2.0 * lb / inst.delta)) + 1);
  }
  while (true) {
    LpEngine engine = opts.engine;
    if (engine == LpEngine::kAuto) {
      engine = n * k <= opts.simplex_max_variables ? LpEngine::kSimplex
                                                   : LpEngine::kTransport;
    }
    detail::SlottedResult r =
        engine == LpEngine::kSimplex
            ? detail::solve_slotted_simplex(inst, k, opts.max_pivots)
            : detail::solve_slotted_transport(inst, k);
    bool certified = r.feasible;
    if (r.feasible && k < inst.slots) {
      for (std::size_t j = 0; j < n; ++j) {
        const double c = inst.cost(j, k);
        if (r.alpha[j] > c * (1.0 + 1e-12)) certified = false;
      }
    }
    if (!certified) {
      if (k == inst.slots) {
        throw LpError("solve_lp: infeasible", LpStatus::kInfeasible);
      }
      k = std::min(inst.slots, 2 * k);
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::copy(r.volume[j].begin(), r.volume[j].end(), sol.volume[j].begin());
      std::copy(r.beta[j].begin(), r.beta[j].end(), sol.beta[j].begin());
      for (std::size_t i = 0; i < k; ++i) {
        sol.objective += inst.cost(j, i) * r.volume[j][i];
      }
    }
    sol.alpha = std::move(r.alpha);
    std::copy(r.gamma.begin(), r.gamma.end(), sol.gamma.begin());
    sol.solved_slots = k;
    sol.engine = engine;
    return sol;
  }
}

/// sum_j alpha_j target_j - sum_ji r_j delta beta_ji - delta sum_i gamma_i.
inline double dual_objective(const LpInstance& inst, const LpSolution& sol) {
  double val = 0.0;
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    val += sol.alpha[j] * inst.targets[j];
    double bsum = 0.0;
    for (double b : sol.beta[j]) bsum += b;
    val -= inst.jobs[j].requirement() * inst.delta * bsum;
  }
  double gsum = 0.0;
  for (double g : sol.gamma) gsum += g;
  return val - inst.delta * gsum;
}

/// The generic LP behind `inst` (all slots), e.g. for write_lp_dump.
inline LinearProgram to_linear_program(const LpInstance& inst) {
  return detail::slotted_program(inst, inst.slots);
}

/// Realises slotted volumes at a constant rate V_ji / delta inside slot i.
inline Schedule lp_schedule(const LpInstance& inst, const LpSolution& sol) {
  Schedule sched;
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    std::vector<double> bps{0.0};
    std::vector<double> vals;
    for (std::size_t i = 0; i < inst.slots; ++i) {
      bps.push_back(static_cast<double>(i + 1) * inst.delta);
      vals.push_back(std::max(0.0, sol.volume[j][i]) / inst.delta);
    }
    sched.push_back(inst.slots == 0 ? StepFunction{}
                                    : StepFunction(std::move(bps), std::move(vals)));
  }
  return sched;
}

}  // namespace sharedres
