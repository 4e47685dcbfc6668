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

// JSON instance/schedule formats and instance generators.
//
//   instance: {"jobs":[{"v":1,"r":0.75},...]}
//   schedule: {"breakpoints":[0,...],"assignments":[[...],...],
//              "completion_times":[...]}   (optional "jobs", "alpha")
//
// Numbers are written with 17 significant digits so that a write/read round
// trip is exact and output is byte-stable.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sharedres/core.hpp"

namespace sharedres {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_array(const std::vector<double>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_number(xs[i]);
  }
  return s + ']';
}

inline std::string instance_to_json(const JobSet& jobs) {
  std::string s = "{\"jobs\":[";
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (j) s += ',';
    s += "{\"v\":" + format_number(jobs[j].volume()) +
         ",\"r\":" + format_number(jobs[j].requirement()) + '}';
  }
  return s + "]}";
}

namespace detail {

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline double number_at(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

inline JobSet jobs_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw FormatError("\"jobs\" must be an array");
  JobSet jobs;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("v") || !item.contains("r")) {
      throw FormatError("each job needs \"v\" and \"r\"");
    }
    try {
      jobs.push_back(Job(number_at(item["v"], "v"), number_at(item["r"], "r")));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return jobs;
}

}  // namespace detail

inline JobSet parse_instance(std::string_view text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object() || !doc.contains("jobs")) {
    throw FormatError("instance needs a \"jobs\" array");
  }
  return detail::jobs_from_json(doc["jobs"]);
}

/// Schedule on the common breakpoint grid of all its jobs.
inline std::string schedule_to_json(const Schedule& sched,
                                    const JobSet* jobs = nullptr,
                                    const std::vector<double>* alpha = nullptr) {
  const std::vector<double> grid = sched.common_breakpoints();
  std::string s = "{\"breakpoints\":" + format_array(grid) + ",\"assignments\":[";
  for (std::size_t j = 0; j < sched.size(); ++j) {
    if (j) s += ',';
    std::vector<double> vals;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) vals.push_back(sched[j](grid[k]));
    s += format_array(vals);
  }
  s += "],\"completion_times\":" + format_array(sched.completion_times());
  if (jobs) {
    const std::string inst = instance_to_json(*jobs);
    s += ',' + inst.substr(1, inst.size() - 2);
  }
  if (alpha) s += ",\"alpha\":" + format_array(*alpha);
  return s + '}';
}

struct ParsedSchedule {
  Schedule schedule;
  std::optional<JobSet> jobs;
  std::optional<std::vector<double>> alpha;
};

inline ParsedSchedule parse_schedule(std::string_view text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object() || !doc.contains("breakpoints") ||
      !doc.contains("assignments")) {
    throw FormatError("schedule needs \"breakpoints\" and \"assignments\"");
  }
  std::vector<double> grid;
  if (!doc["breakpoints"].is_array()) throw FormatError("breakpoints must be an array");
  for (const auto& t : doc["breakpoints"]) grid.push_back(detail::number_at(t, "breakpoint"));
  if (!doc["assignments"].is_array()) throw FormatError("assignments must be an array");
  ParsedSchedule out;
  for (const auto& row : doc["assignments"]) {
    if (!row.is_array()) throw FormatError("assignment rows must be arrays");
    std::vector<double> vals;
    for (const auto& x : row) vals.push_back(detail::number_at(x, "assignment"));
    if (grid.empty() && vals.empty()) {
      out.schedule.push_back(StepFunction{});
      continue;
    }
    try {
      StepFunction f(grid, std::move(vals));
      if (f.min_value() < 0.0) throw FormatError("negative assignment");
      out.schedule.push_back(std::move(f));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (doc.contains("jobs")) out.jobs = detail::jobs_from_json(doc["jobs"]);
  if (doc.contains("alpha")) {
    std::vector<double> a;
    if (!doc["alpha"].is_array()) throw FormatError("alpha must be an array");
    for (const auto& x : doc["alpha"]) a.push_back(detail::number_at(x, "alpha"));
    out.alpha = std::move(a);
  }
  return out;
}

struct RandomInstanceParams {
  double v_min = 0.1;
  double v_max = 10.0;
  double r_min = 0.05;  // exclusive
  double r_max = 1.0;   // inclusive
};

/// n jobs with v log-uniform on [v_min, v_max] and r uniform on
/// (r_min, r_max], from mt19937_64(seed); equal volumes are perturbed.
/// Uniform variates are built from the raw 64-bit stream, so the output is
/// identical across standard libraries.
inline JobSet random_instance(std::size_t n, std::uint64_t seed,
                              const RandomInstanceParams& p = {}) {
  if (!(p.v_min > 0.0 && p.v_max >= p.v_min && p.r_min >= 0.0 &&
        p.r_max > p.r_min && p.r_max <= 1.0)) {
    throw std::invalid_argument("random_instance: bad distribution parameters");
  }
  std::mt19937_64 rng(seed);
  auto unit = [&] {  // [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Job> jobs;
  jobs.reserve(n);
  const double lo = std::log(p.v_min);
  const double hi = std::log(p.v_max);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = std::exp(lo + (hi - lo) * unit());
    const double r = p.r_max - (p.r_max - p.r_min) * unit();
    jobs.emplace_back(v, r);
  }
  return perturb_degenerate(JobSet(std::move(jobs)));
}

}  // namespace sharedres
