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

// The sharedres command-line harness: gen | run | verify | compare | plot.
// Kept in a header so tests can drive it in-process.

#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sharedres/sharedres.hpp"

namespace sharedres::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kAlgorithmFailure = 3,
  kValidationFailure = 4,
};

/// Raised for bad input files or flag combinations; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimal ordered JSON object writer; numbers via format_number.
class JsonObject {
 public:
  JsonObject& num(const std::string& key, double v) {
    return raw(key, format_number(v));
  }
  JsonObject& num(const std::string& key, std::optional<double> v) {
    return raw(key, v ? format_number(*v) : "null");
  }
  JsonObject& integer(const std::string& key, long long v) {
    return raw(key, std::to_string(v));
  }
  JsonObject& str(const std::string& key, const std::string& v) {
    return raw(key, quote(v));
  }
  JsonObject& boolean(const std::string& key, bool v) {
    return raw(key, v ? "true" : "false");
  }
  JsonObject& raw(const std::string& key, std::string json) {
    fields_.emplace_back(key, std::move(json));
    return *this;
  }
  [[nodiscard]] std::string dump() const {
    std::string s = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) s += ',';
      s += quote(fields_[i].first) + ':' + fields_[i].second;
    }
    return s + '}';
  }

  static std::string quote(const std::string& v) {
    std::string s = "\"";
    for (char c : v) {
      switch (c) {
        case '"':
          s += "\\\"";
          break;
        case '\\':
          s += "\\\\";
          break;
        case '\n':
          s += "\\n";
          break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            s += buf;
          } else {
            s += c;
          }
      }
    }
    return s + '"';
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string validation_json(const ValidationReport& rep) {
  std::string arr = "[";
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    const Violation& v = rep.violations[i];
    JsonObject o;
    o.str("kind", to_string(v.kind));
    o.raw("job", v.job ? std::to_string(*v.job) : "null");
    o.num("begin", v.begin).num("end", v.end).num("magnitude", v.magnitude);
    if (i) arr += ',';
    arr += o.dump();
  }
  arr += ']';
  return JsonObject().boolean("feasible", rep.feasible()).raw("violations", arr).dump();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline JobSet load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// Seed recorded by `gen`, if the instance carries one.
inline std::optional<std::uint64_t> instance_seed(const std::string& text) {
  try {
    auto doc = nlohmann::json::parse(text);
    if (doc.contains("generator") && doc["generator"].contains("seed") &&
        doc["generator"]["seed"].is_number_unsigned()) {
      return doc["generator"]["seed"].get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception&) {
  }
  return std::nullopt;
}

struct AlgoParams {
  double c = kWaterfillRatio;
  double tol = kDefaultTol;
  int grid = 1000;
  bool exact_ls = true;
  LsApproxParams approx;
};

/// Outcome of one algorithm on one instance.
struct AlgoRun {
  std::string algo;
  std::optional<Schedule> schedule;
  std::optional<AlphaVector> alpha;  // line schedules only
  std::optional<std::string> error;
  std::optional<std::string> error_stage;
  JsonObject extra;  // algorithm-specific report fields
  double wall_ms = 0.0;
};

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"waterfill", "greedy", "ls",
                                              "lsapprox", "best"};
  return names;
}

inline AlgoRun run_algorithm(const std::string& algo, const JobSet& jobs,
                             const AlgoParams& p) {
  AlgoRun run;
  run.algo = algo;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (algo == "waterfill") {
      OnlineRun online = waterfill_online(jobs, p.c, p.tol);
      const double mstar = optimal_makespan(jobs.prefix(online.schedule.size())).value;
      run.extra.num("optimal_makespan_prefix", mstar);
      if (online.failure) {
        run.error = "waterfill: job could not be placed by its deadline";
        run.error_stage = "waterfill";
        run.extra.integer("failure_index", static_cast<long long>(online.failure->job));
        run.extra.num("failure_deficit", online.failure->deficit);
      } else {
        const JobSet placed = jobs;
        run.extra.boolean(
            "flatter_than_universal",
            is_flatter(online.schedule, UniversalSchedule{jobs.total_volume()}, p.tol));
        run.extra.boolean("extendable",
                          extendability_check(online.schedule, placed, p.c, p.grid, p.tol));
        run.schedule = std::move(online.schedule);
      }
    } else if (algo == "greedy") {
      run.schedule = greedy(jobs);
    } else if (algo == "ls") {
      LsResult ls = ls_exact(jobs, p.tol);
      run.extra.num("P", ls.duality.P).num("A", ls.duality.A);
      run.extra.num("B", ls.duality.B).num("Gamma", ls.duality.Gamma);
      run.alpha = ls.alpha();
      run.schedule = ls.schedule();
    } else if (algo == "lsapprox") {
      LsApproxResult r = lsapprox(jobs, p.approx);
      run.extra.integer("light", static_cast<long long>(r.subdivision.light.size()));
      run.extra.integer("short_heavy",
                        static_cast<long long>(r.subdivision.short_heavy.size()));
      run.extra.integer("long_heavy",
                        static_cast<long long>(r.subdivision.long_heavy.size()));
      run.extra.num("horizon", r.horizon).num("guarantee_delta", r.guarantee_delta);
      run.extra.num("stretch", r.stretch).num("lp_objective", r.lp_objective);
      run.schedule = std::move(r.schedule);
    } else if (algo == "best") {
      BestResult b = best_schedule(jobs, p.approx, p.exact_ls, p.tol);
      run.extra.str("winner", b.report.winner);
      run.extra.num("greedy_tct", b.report.greedy_tct);
      run.extra.num("ls_tct", b.report.ls_tct);
      if (b.report.ls_error) run.extra.str("ls_error", *b.report.ls_error);
      run.extra.boolean("perturbed", b.report.perturbed);
      run.schedule = std::move(b.schedule);
    } else {
      throw UsageError("unknown algorithm '" + algo + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const PipelineError& e) {
    run.error = e.what();
    run.error_stage = e.stage();
  } catch (const std::invalid_argument& e) {
    // Contract violations on the input, e.g. equal volumes for ls.
    run.error = e.what();
    run.error_stage = "input";
  } catch (const std::exception& e) {
    run.error = e.what();
    run.error_stage = algo;
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

/// C^F of the exact line schedule (the fractional stand-in), if it solves.
/// Stand-in for the fractional optimum in LB3. Skipped (null) for instances
/// with equal volumes: tie-broken line schedules are too ill-conditioned to
/// solve in reasonable time there.
inline std::optional<double> line_fractional(const JobSet& jobs, double tol) {
  if (jobs.empty()) return 0.0;
  if (!jobs.non_degenerate()) return std::nullopt;
  try {
    return fractional_completion_time(jobs, ls_exact(jobs, tol).schedule()).total;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string params_json(const AlgoParams& p, std::optional<std::uint64_t> seed) {
  JsonObject o;
  o.num("c", p.c).num("eps", p.approx.epsilon).num("mu", p.approx.mu());
  o.num("delta", p.approx.delta_override);
  o.num("tol", p.tol).integer("grid", p.grid);
  o.str("ls", p.exact_ls ? "exact" : "lp");
  o.raw("seed", seed ? std::to_string(*seed) : "null");
  return o.dump();
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Shared-resource scheduling toolkit", "sharedres"};
    app.require_subcommand(1);
    register_gen(app);
    register_run(app);
    register_verify(app);
    register_compare(app);
    register_plot(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }
    try {
      return action_();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

 private:
  void add_algo_flags(CLI::App* cmd) {
    cmd->add_option("--c", params_.c, "WaterFill competitive target c")
        ->capture_default_str();
    cmd->add_option("--eps", params_.approx.epsilon, "LSApprox epsilon")
        ->capture_default_str();
    cmd->add_option("--mu", mu_, "LSApprox mu (rounded down to 1/k)");
    cmd->add_option("--delta", delta_, "LP slot width (default T/1024)");
    cmd->add_option("--tol", params_.tol, "numeric tolerance")->capture_default_str();
    cmd->add_option("--grid", params_.grid, "extendability check grid size")
        ->capture_default_str();
    cmd->add_flag("--exact-ls,!--lp-ls", params_.exact_ls,
                  "best: exact line schedule (default) or LSApprox");
  }

  void finish_params() {
    if (mu_) params_.approx.mu_override = *mu_;
    if (delta_) params_.approx.delta_override = *delta_;
    if (!(params_.tol > 0.0)) throw UsageError("--tol must be > 0");
    if (!(params_.c >= 1.0)) throw UsageError("--c must be >= 1");
    if (params_.grid < 1) throw UsageError("--grid must be >= 1");
    if (!(params_.approx.epsilon > 0.0)) throw UsageError("--eps must be > 0");
    (void)params_.approx.mu();  // validates
  }

  // ---- gen ---------------------------------------------------------------
  void register_gen(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen", "generate an instance");
    cmd->add_option("--kind", gen_kind_, "random | adversarial | file")
        ->check(CLI::IsMember({"random", "adversarial", "file"}))
        ->capture_default_str();
    cmd->add_option("-n,--n", gen_n_, "number of jobs")->capture_default_str();
    cmd->add_option("--seed", gen_seed_, "RNG seed")->capture_default_str();
    cmd->add_option("--v-min", gen_dist_.v_min)->capture_default_str();
    cmd->add_option("--v-max", gen_dist_.v_max)->capture_default_str();
    cmd->add_option("--r-min", gen_dist_.r_min, "exclusive")->capture_default_str();
    cmd->add_option("--r-max", gen_dist_.r_max, "inclusive")->capture_default_str();
    cmd->add_option("-i,--input", input_, "source instance for --kind file");
    cmd->add_option("-o,--output", output_, "output path (default stdout)");
    cmd->callback([this] { action_ = [this] { return cmd_gen(); }; });
  }

  int cmd_gen() {
    if (gen_n_ < 0) throw UsageError("--n must be >= 0");
    JobSet jobs;
    JsonObject gen;
    gen.str("kind", gen_kind_);
    if (gen_kind_ == "random") {
      jobs = random_instance(static_cast<std::size_t>(gen_n_), gen_seed_, gen_dist_);
      gen.integer("n", gen_n_).raw("seed", std::to_string(gen_seed_));
      gen.num("v_min", gen_dist_.v_min).num("v_max", gen_dist_.v_max);
      gen.num("r_min", gen_dist_.r_min).num("r_max", gen_dist_.r_max);
    } else if (gen_kind_ == "adversarial") {
      if (gen_n_ < 1) throw UsageError("adversarial instances need --n >= 1");
      jobs = adversarial_instance(static_cast<std::size_t>(gen_n_));
      gen.integer("n", gen_n_);
    } else {
      if (input_.empty()) throw UsageError("--kind file needs --input");
      jobs = perturb_degenerate(load_instance(input_));
    }
    std::string text = instance_to_json(jobs);
    text.pop_back();
    text += ",\"generator\":" + gen.dump() + "}\n";
    write_output(output_, text, out_);
    return kOk;
  }

  // ---- run ---------------------------------------------------------------
  void register_run(CLI::App& app) {
    auto* cmd = app.add_subcommand("run", "run one algorithm on an instance");
    cmd->add_option("--algo", algo_, "waterfill | greedy | ls | lsapprox | best")
        ->required()
        ->check(CLI::IsMember(algorithm_names()));
    cmd->add_option("-i,--input", input_, "instance JSON")->required();
    cmd->add_option("-o,--output", output_, "run record path (default stdout)");
    cmd->add_option("--schedule-out", schedule_out_, "also write the schedule JSON");
    cmd->add_option("--seed", seed_, "seed to record (default: from instance)");
    cmd->add_flag("--no-timing", no_timing_, "record wall_ms as 0");
    add_algo_flags(cmd);
    cmd->callback([this] { action_ = [this] { return cmd_run(); }; });
  }

  int cmd_run() {
    finish_params();
    const std::string text = read_file(input_);
    JobSet jobs;
    try {
      jobs = parse_instance(text);
    } catch (const FormatError& e) {
      throw UsageError(input_ + ": " + e.what());
    }
    std::optional<std::uint64_t> seed = seed_ ? seed_ : instance_seed(text);
    AlgoRun run = run_algorithm(algo_, jobs, params_);
    if (no_timing_) run.wall_ms = 0.0;

    JsonObject rec;
    rec.str("instance", std::filesystem::path(input_).stem().string());
    rec.str("algo", algo_).integer("n", static_cast<long long>(jobs.size()));
    rec.raw("params", params_json(params_, seed));
    rec.num("wall_ms", run.wall_ms);
    rec.raw("seed", seed ? std::to_string(*seed) : "null");
    rec.raw("report", run.extra.dump());
    if (run.error) {
      JsonObject e;
      e.str("stage", run.error_stage.value_or(algo_)).str("message", *run.error);
      rec.str("status", "failed").raw("error", e.dump());
      write_output(output_, rec.dump() + "\n", out_);
      err_ << "error: " << *run.error << '\n';
      return kAlgorithmFailure;
    }
    const Schedule& sched = *run.schedule;
    const ValidationReport rep = validate_schedule(jobs, sched, params_.tol);
    const Bounds b = lower_bounds(jobs, line_fractional(jobs, params_.tol));
    const double mk = makespan(sched);
    const double tct = total_completion_time(jobs, sched);
    const double ftct = fractional_completion_time(jobs, sched).total;
    const double mstar = optimal_makespan(jobs).value;
    JsonObject obj;
    obj.num("makespan", mk).num("tct", tct).num("ftct", ftct);
    JsonObject bounds;
    bounds.num("optimal_makespan", mstar).num("c_a", b.c_a).num("c_l", b.c_l);
    bounds.num("lb3", b.lb3).num("best", b.best());
    JsonObject ratios;
    if (mstar > 0.0) ratios.num("makespan", mk / mstar);
    if (b.c_a > 0.0) ratios.num("c_a", tct / b.c_a);
    if (b.c_l > 0.0) ratios.num("c_l", tct / b.c_l);
    if (b.lb3 && *b.lb3 > 0.0) ratios.num("lb3", tct / *b.lb3);
    if (b.best() > 0.0) ratios.num("best", tct / b.best());
    const std::string sched_json =
        schedule_to_json(sched, &jobs, run.alpha ? &*run.alpha : nullptr);
    rec.str("status", rep.feasible() ? "ok" : "invalid");
    rec.raw("objectives", obj.dump()).raw("bounds", bounds.dump());
    rec.raw("ratios", ratios.dump()).raw("validation", validation_json(rep));
    rec.raw("schedule", sched_json);
    write_output(output_, rec.dump() + "\n", out_);
    if (!schedule_out_.empty()) write_output(schedule_out_, sched_json + "\n", out_);
    return rep.feasible() ? kOk : kValidationFailure;
  }

  // ---- verify ------------------------------------------------------------
  void register_verify(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "validate a schedule against an instance");
    cmd->add_option("-i,--input", input_, "instance JSON")->required();
    cmd->add_option("-s,--schedule", schedule_in_, "schedule JSON")->required();
    cmd->add_option("--tol", params_.tol, "numeric tolerance")->capture_default_str();
    cmd->callback([this] { action_ = [this] { return cmd_verify(); }; });
  }

  int cmd_verify() {
    const JobSet jobs = load_instance(input_);
    ParsedSchedule ps;
    try {
      ps = parse_schedule(read_file(schedule_in_));
    } catch (const FormatError& e) {
      throw UsageError(schedule_in_ + ": " + e.what());
    }
    if (ps.schedule.size() != jobs.size()) {
      throw UsageError("schedule and instance have different job counts");
    }
    const ValidationReport rep = validate_schedule(jobs, ps.schedule, params_.tol);
    out_ << validation_json(rep) << '\n';
    return rep.feasible() ? kOk : kValidationFailure;
  }

  // ---- compare -----------------------------------------------------------
  void register_compare(CLI::App& app) {
    auto* cmd = app.add_subcommand("compare", "tabulate algorithms over instances");
    cmd->add_option("--inputs", inputs_, "instance files or glob patterns")
        ->required();
    cmd->add_option("--algos", algos_, "comma-separated algorithm list")
        ->delimiter(',')
        ->check(CLI::IsMember(algorithm_names()))
        ->capture_default_str();
    cmd->add_option("-o,--output", output_, "CSV path (default stdout)");
    cmd->add_flag("--no-timing", no_timing_, "write wall_ms as 0 (reproducible bytes)");
    add_algo_flags(cmd);
    cmd->callback([this] { action_ = [this] { return cmd_compare(); }; });
  }

  static std::vector<std::string> expand(const std::vector<std::string>& patterns) {
    std::vector<std::string> files;
    for (const std::string& pat : patterns) {
      if (pat.find_first_of("*?[") == std::string::npos) {
        if (std::filesystem::exists(pat)) files.push_back(pat);
        continue;
      }
      std::filesystem::path p(pat);
      std::filesystem::path dir = p.parent_path().empty() ? "." : p.parent_path();
      if (!std::filesystem::is_directory(dir)) continue;
      const std::string leaf = p.filename().string();
      for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (fnmatch(leaf.c_str(), entry.path().filename().c_str(), 0) == 0) {
          files.push_back((p.parent_path() / entry.path().filename()).string());
        }
      }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    return files;
  }

  int cmd_compare() {
    finish_params();
    const std::vector<std::string> files = expand(inputs_);
    if (files.empty()) throw UsageError("no instance matches --inputs");
    std::ostringstream csv;
    csv << "instance,algo,n,makespan,tct,ftct,c_a,c_l,lb3,ratio_best,wall_ms,seed\n";
    std::map<std::string, double> max_ratio;
    double max_combined = 0.0;
    bool any_failed = false;
    auto cell = [](std::optional<double> v) {
      return v ? format_number(*v) : std::string();
    };
    for (const std::string& file : files) {
      const std::string text = read_file(file);
      JobSet jobs;
      try {
        jobs = parse_instance(text);
      } catch (const FormatError& e) {
        throw UsageError(file + ": " + e.what());
      }
      const std::string id = std::filesystem::path(file).stem().string();
      const auto seed = instance_seed(text);
      const Bounds b = lower_bounds(jobs, line_fractional(jobs, params_.tol));
      std::optional<double> best_tct;
      for (const std::string& algo : algos_) {
        AlgoRun run = run_algorithm(algo, jobs, params_);
        if (no_timing_) run.wall_ms = 0.0;
        csv << id << ',' << algo << ',' << jobs.size() << ',';
        if (run.error || !validate_schedule(jobs, *run.schedule, params_.tol).feasible()) {
          any_failed = true;
          csv << "FAILED,,,,,,,";
        } else {
          const Schedule& s = *run.schedule;
          const double tct = total_completion_time(jobs, s);
          std::optional<double> ratio;
          if (b.best() > 0.0) ratio = tct / b.best();
          if (ratio) max_ratio[algo] = std::max(max_ratio[algo], *ratio);
          best_tct = std::min(best_tct.value_or(tct), tct);
          csv << format_number(makespan(s)) << ',' << format_number(tct) << ','
              << format_number(fractional_completion_time(jobs, s).total) << ','
              << format_number(b.c_a) << ',' << format_number(b.c_l) << ','
              << cell(b.lb3) << ',' << cell(ratio) << ',';
        }
        csv << format_number(run.wall_ms) << ',' << (seed ? std::to_string(*seed) : "")
            << '\n';
      }
      if (best_tct && b.best() > 0.0) {
        max_combined = std::max(max_combined, *best_tct / b.best());
      }
    }
    for (const std::string& algo : algos_) {
      csv << "summary," << algo << ",,,,,,,," << cell(max_ratio.count(algo)
                                                         ? std::optional(max_ratio[algo])
                                                         : std::nullopt)
          << ",,\n";
    }
    csv << "summary,combined,,,,,,,," << format_number(max_combined) << ",,\n";
    write_output(output_, csv.str(), out_);
    return any_failed ? kAlgorithmFailure : kOk;
  }

  // ---- plot --------------------------------------------------------------
  void register_plot(CLI::App& app) {
    auto* cmd = app.add_subcommand("plot", "render a schedule as SVG");
    cmd->add_option("-s,--schedule", schedule_in_, "schedule JSON")->required();
    cmd->add_option("-o,--output", output_, "SVG path (default stdout)");
    cmd->add_flag("--duals", svg_.duals, "overlay dual lines and gamma");
    cmd->add_option("--width", svg_.width)->capture_default_str();
    cmd->add_option("--height", svg_.height)->capture_default_str();
    cmd->callback([this] { action_ = [this] { return cmd_plot(); }; });
  }

  int cmd_plot() {
    ParsedSchedule ps;
    try {
      ps = parse_schedule(read_file(schedule_in_));
    } catch (const FormatError& e) {
      throw UsageError(schedule_in_ + ": " + e.what());
    }
    if (svg_.width < 2 * svg_.margin + 1 || svg_.height < 2 * svg_.margin + 1) {
      throw UsageError("plot size too small");
    }
    const JobSet* jobs = ps.jobs ? &*ps.jobs : nullptr;
    const std::vector<double>* alpha = ps.alpha ? &*ps.alpha : nullptr;
    if (svg_.duals && (!jobs || !alpha || jobs->size() != alpha->size())) {
      throw UsageError("--duals needs a schedule with \"jobs\" and \"alpha\"");
    }
    write_output(output_, render_svg(ps.schedule, svg_, jobs, alpha), out_);
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<int()> action_;

  std::string input_;
  std::string output_;
  std::string schedule_in_;
  std::string schedule_out_;
  std::vector<std::string> inputs_;
  std::vector<std::string> algos_{"greedy", "ls"};
  std::string algo_;
  std::string gen_kind_ = "random";
  int gen_n_ = 5;
  std::uint64_t gen_seed_ = 0;
  RandomInstanceParams gen_dist_;
  std::optional<std::uint64_t> seed_;
  std::optional<double> mu_;
  std::optional<double> delta_;
  bool no_timing_ = false;
  AlgoParams params_;
  SvgOptions svg_;
};

/// Entry point shared by the binary and the tests.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  std::vector<const char*> argv{"sharedres"};
  for (const auto& a : args) argv.push_back(a.c_str());
  App app(out, err);
  return app.run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace sharedres::cli
