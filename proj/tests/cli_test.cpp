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

#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sharedres::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return name;
}

std::string slurp(const std::string& name) {
  std::ifstream in(name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kWorked =
    R"({"jobs":[{"v":1,"r":0.75},{"v":4,"r":0.5},{"v":6,"r":0.66666666666666663}]})";

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kUsage);
  EXPECT_EQ(cli({"bogus"}).code, kUsage);
  EXPECT_EQ(cli({"run", "--algo", "nope", "-i", write("cli_worked.json", kWorked)}).code, kUsage);
  EXPECT_EQ(cli({"run", "--algo", "greedy", "-i", "does_not_exist.json"}).code, kUsage);
  EXPECT_EQ(cli({"run", "--algo", "greedy", "-i", write("cli_bad.json", "{")}).code, kUsage);
  EXPECT_EQ(cli({"--help"}).code, kOk);
}

TEST(CliTest, GenAdversarialAndDeterminism) {
  const auto adv = cli({"gen", "--kind", "adversarial", "-n", "3"});
  ASSERT_EQ(adv.code, kOk) << adv.err;
  const auto doc = nlohmann::json::parse(adv.out);
  ASSERT_EQ(doc["jobs"].size(), 3u);
  EXPECT_DOUBLE_EQ(doc["jobs"][2]["r"].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(doc["jobs"][0]["v"].get<double>(), 1.0 / 3.0);

  const auto a = cli({"gen", "-n", "20", "--seed", "7"});
  const auto b = cli({"gen", "-n", "20", "--seed", "7"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, cli({"gen", "-n", "20", "--seed", "8"}).out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["generator"]["seed"].get<int>(), 7);

  const auto empty = cli({"gen", "-n", "0"});
  ASSERT_EQ(empty.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(empty.out)["jobs"].size(), 0u);
  EXPECT_EQ(cli({"gen", "--kind", "adversarial", "-n", "0"}).code, kUsage);
}

TEST(CliTest, RunGreedyWorkedExample) {
  const auto r = cli({"run", "--algo", "greedy", "-i", write("cli_worked.json", kWorked),
                      "--schedule-out", "cli_worked_sched.json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rec = nlohmann::json::parse(r.out);
  EXPECT_EQ(rec["status"], "ok");
  EXPECT_NEAR(rec["objectives"]["tct"].get<double>(), 133.0 / 6.0, 1e-12);
  EXPECT_NEAR(rec["bounds"]["c_a"].get<double>(), 17.0, 1e-12);
  EXPECT_NEAR(rec["bounds"]["c_l"].get<double>(), 55.0 / 3.0, 1e-12);

  const auto v = cli({"verify", "-i", "cli_worked.json", "-s", "cli_worked_sched.json"});
  EXPECT_EQ(v.code, kOk) << v.out;

  const auto p = cli({"plot", "-s", "cli_worked_sched.json", "-o", "cli_worked.svg"});
  ASSERT_EQ(p.code, kOk);
  EXPECT_NE(slurp("cli_worked.svg").find("<svg"), std::string::npos);
  // The greedy schedule carries no duals.
  EXPECT_EQ(cli({"plot", "-s", "cli_worked_sched.json", "--duals"}).code, kUsage);
}

TEST(CliTest, VerifyRejectsInfeasible) {
  write("cli_one.json", R"({"jobs":[{"v":1,"r":0.5}]})");
  write("cli_over.json", R"({"breakpoints":[0,1],"assignments":[[1]]})");
  const auto v = cli({"verify", "-i", "cli_one.json", "-s", "cli_over.json"});
  EXPECT_EQ(v.code, kValidationFailure);
  EXPECT_NE(v.out.find("requirement"), std::string::npos);
  write("cli_two_rows.json", R"({"breakpoints":[0,2],"assignments":[[0.5],[0.5]]})");
  EXPECT_EQ(cli({"verify", "-i", "cli_one.json", "-s", "cli_two_rows.json"}).code, kUsage);
}

TEST(CliTest, RunLsWithDualsPlot) {
  const auto r = cli({"run", "--algo", "ls", "-i", write("cli_worked.json", kWorked),
                      "--schedule-out", "cli_ls_sched.json", "-o", "cli_ls_rec.json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rec = nlohmann::json::parse(slurp("cli_ls_rec.json"));
  EXPECT_NEAR(rec["objectives"]["tct"].get<double>(), 22.875, 1e-8);
  const auto p = cli({"plot", "-s", "cli_ls_sched.json", "--duals"});
  ASSERT_EQ(p.code, kOk) << p.err;
  EXPECT_NE(p.out.find("class=\"gamma\""), std::string::npos);
}

TEST(CliTest, WaterfillFailureAndSuccess) {
  const auto gen = cli({"gen", "--kind", "adversarial", "-n", "500", "-o", "cli_adv.json"});
  ASSERT_EQ(gen.code, kOk);
  const auto bad = cli({"run", "--algo", "waterfill", "--c", "1.55", "-i", "cli_adv.json"});
  EXPECT_EQ(bad.code, kAlgorithmFailure);
  const auto rec = nlohmann::json::parse(bad.out);
  EXPECT_EQ(rec["status"], "failed");
  EXPECT_TRUE(rec["report"].contains("failure_index"));
  const auto ok = cli({"run", "--algo", "waterfill", "-i", "cli_adv.json"});
  EXPECT_EQ(ok.code, kOk) << ok.err;
}

TEST(CliTest, RunBestSingleJob) {
  const auto r = cli({"run", "--algo", "best", "-i",
                      write("cli_single.json", R"({"jobs":[{"v":2,"r":0.5}]})")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["objectives"]["tct"].get<double>(), 4.0, 1e-9);
  const auto a = cli({"run", "--algo", "lsapprox", "-i", "cli_single.json"});
  EXPECT_EQ(a.code, kOk) << a.err;
}

TEST(CliTest, Compare) {
  std::filesystem::create_directories("cli_cmp");
  for (int s = 0; s < 20; ++s) {
    const auto g = cli({"gen", "-n", "6", "--seed", std::to_string(s), "-o",
                        "cli_cmp/inst_" + std::to_string(s) + ".json"});
    ASSERT_EQ(g.code, kOk);
  }
  const auto a = cli({"compare", "--inputs", "cli_cmp/*.json", "--algos", "greedy,ls",
                      "--no-timing"});
  ASSERT_EQ(a.code, kOk) << a.err;
  const auto b = cli({"compare", "--inputs", "cli_cmp/*.json", "--algos", "greedy,ls",
                      "--no-timing"});
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "instance,algo,n,makespan,tct,ftct,c_a,c_l,lb3,ratio_best,wall_ms,seed");
  int rows = 0;
  double combined = -1.0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary,combined,", 0) == 0) {
      combined = std::stod(line.substr(line.rfind(',', line.size() - 3) + 1));
    } else if (line.rfind("summary", 0) != 0) {
      ++rows;
    }
  }
  EXPECT_EQ(rows, 40);
  ASSERT_GE(combined, 1.0);
  EXPECT_LE(combined, 1.5 + 1e-6);

  const auto one = cli({"compare", "--inputs", write("cli_worked.json", kWorked), "--algos",
                        "greedy", "--no-timing"});
  ASSERT_EQ(one.code, kOk);
  EXPECT_NE(one.out.find("cli_worked,greedy,3,"), std::string::npos);

  EXPECT_EQ(cli({"compare", "--inputs", "cli_nothing_*.json"}).code, kUsage);
  EXPECT_EQ(cli({"compare", "--inputs", "cli_worked.json", "--algos", "greedy,zzz"}).code,
            kUsage);
}

TEST(CliTest, ReadmeFlow) {
  // gen -> run -> verify -> plot through files, as documented.
  ASSERT_EQ(cli({"gen", "-n", "8", "--seed", "3", "-o", "cli_flow.json"}).code, kOk);
  ASSERT_EQ(cli({"run", "--algo", "best", "-i", "cli_flow.json", "-o", "cli_flow_rec.json",
                 "--schedule-out", "cli_flow_sched.json"})
                .code,
            kOk);
  EXPECT_EQ(cli({"verify", "-i", "cli_flow.json", "-s", "cli_flow_sched.json"}).code, kOk);
  EXPECT_EQ(cli({"plot", "-s", "cli_flow_sched.json", "-o", "cli_flow.svg"}).code, kOk);
  const auto rec = nlohmann::json::parse(slurp("cli_flow_rec.json"));
  EXPECT_EQ(rec["seed"].get<int>(), 3);
}

}  // namespace
}  // namespace sharedres::cli
