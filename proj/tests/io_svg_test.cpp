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

#include <gtest/gtest.h>

#include "sharedres/io.hpp"
#include "sharedres/svg.hpp"
#include "sharedres/tct.hpp"
#include "test_util.hpp"

namespace sharedres {
namespace {

TEST(FormatTest, Numbers) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(format_number(kInf), "null");
  EXPECT_EQ(format_array({1.0, 2.0}), "[1,2]");
  EXPECT_EQ(format_array({}), "[]");
}

TEST(InstanceIoTest, RoundTrip) {
  const JobSet jobs = testing::worked_jobs();
  const std::string text = instance_to_json(jobs);
  EXPECT_EQ(text.rfind("{\"jobs\":[{\"v\":1,\"r\":0.75}", 0), 0u);
  const JobSet back = parse_instance(text);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(back[j].volume(), jobs[j].volume());
    EXPECT_EQ(back[j].requirement(), jobs[j].requirement());
  }
  EXPECT_EQ(instance_to_json(back), text);
  EXPECT_EQ(parse_instance("{\"jobs\":[]}").size(), 0u);
}

TEST(InstanceIoTest, Malformed) {
  EXPECT_THROW(parse_instance("{"), FormatError);
  EXPECT_THROW(parse_instance("[]"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":3}"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":[{\"v\":1}]}"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":[{\"v\":\"1\",\"r\":1}]}"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":[{\"v\":1,\"r\":0}]}"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":[{\"v\":1,\"r\":1.5}]}"), FormatError);
  EXPECT_THROW(parse_instance("{\"jobs\":[{\"v\":-1,\"r\":1}]}"), FormatError);
}

TEST(ScheduleIoTest, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const JobSet jobs = testing::random_jobs(seed, 8);
    const auto ls = ls_exact(jobs);
    const std::string text = schedule_to_json(ls.schedule(), &jobs, &ls.alpha());
    const ParsedSchedule p = parse_schedule(text);
    ASSERT_EQ(p.schedule.size(), jobs.size());
    ASSERT_TRUE(p.jobs.has_value());
    ASSERT_TRUE(p.alpha.has_value());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      for (double t : testing::grid_midpoints(ls.schedule())) {
        EXPECT_EQ(p.schedule[j](t), ls.schedule()[j](t));
      }
      EXPECT_EQ((*p.alpha)[j], ls.alpha()[j]);
    }
    // Byte stability: writing the parsed schedule again gives the same text.
    EXPECT_EQ(schedule_to_json(p.schedule, &*p.jobs, &*p.alpha), text);
  }
}

TEST(ScheduleIoTest, Layout) {
  const Schedule s({StepFunction::constant(0.5, 0.0, 2.0)});
  EXPECT_EQ(schedule_to_json(s),
            "{\"breakpoints\":[0,2],\"assignments\":[[0.5]],\"completion_times\":[2]}");
  const auto empty = parse_schedule(schedule_to_json(Schedule()));
  EXPECT_EQ(empty.schedule.size(), 0u);
  EXPECT_FALSE(empty.jobs.has_value());
}

TEST(ScheduleIoTest, Malformed) {
  EXPECT_THROW(parse_schedule("{\"breakpoints\":[0,1]}"), FormatError);
  EXPECT_THROW(parse_schedule("{\"breakpoints\":[0,1],\"assignments\":[[1,2]]}"),
               FormatError);
  EXPECT_THROW(parse_schedule("{\"breakpoints\":[0,1],\"assignments\":[[-1]]}"),
               FormatError);
  EXPECT_THROW(parse_schedule("{\"breakpoints\":[1,0],\"assignments\":[[1]]}"),
               FormatError);
  EXPECT_THROW(parse_schedule("nonsense"), FormatError);
}

TEST(RandomInstanceTest, DeterministicAndInRange) {
  const JobSet a = random_instance(50, 42);
  const JobSet b = random_instance(50, 42);
  EXPECT_EQ(instance_to_json(a), instance_to_json(b));
  EXPECT_NE(instance_to_json(a), instance_to_json(random_instance(50, 43)));
  EXPECT_TRUE(a.non_degenerate());
  for (const Job& j : a) {
    EXPECT_GE(j.volume(), 0.1 * (1 - 1e-12));
    EXPECT_LE(j.volume(), 10.0 * (1 + 1e-12));
    EXPECT_GT(j.requirement(), 0.05);
    EXPECT_LE(j.requirement(), 1.0);
  }
  EXPECT_EQ(random_instance(0, 1).size(), 0u);
  EXPECT_THROW(random_instance(3, 1, {1.0, 0.5, 0.1, 1.0}), std::invalid_argument);
}

TEST(SvgTest, GreedyWorkedExample) {
  const JobSet jobs = testing::worked_jobs();
  const Schedule g = greedy(jobs);
  const SvgRender r = layout_schedule(g);
  EXPECT_NEAR(r.horizon, 73.0 / 6.0, 1e-12);
  // Stacked rectangles start at the breakpoints 0, 4/3, 26/3.
  std::vector<double> starts;
  for (const SvgRect& rect : r.rects) starts.push_back((rect.x - 40.0) / r.x_scale);
  for (double t : {0.0, 4.0 / 3.0, 26.0 / 3.0}) {
    EXPECT_TRUE(std::any_of(starts.begin(), starts.end(),
                            [&](double s) { return std::abs(s - t) < 1e-9; }))
        << t;
  }
  // Area drawn per job equals its volume.
  std::vector<double> area(3, 0.0);
  for (const SvgRect& rect : r.rects) {
    area[rect.job] += rect.w * rect.h / (r.x_scale * r.y_scale);
    EXPECT_GE(rect.y, 40.0 - 1e-9);  // never above the unit line
  }
  for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(area[j], jobs[j].volume(), 1e-9);

  const std::string svg = render_svg(g);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("class=\"unit\""), std::string::npos);
  EXPECT_NE(svg.find("data-job=\"2\""), std::string::npos);
  EXPECT_EQ(svg.find("class=\"dual\""), std::string::npos);
  EXPECT_EQ(render_svg(g), svg);
}

TEST(SvgTest, DualOverlayAndEmpty) {
  const JobSet jobs = testing::worked_jobs();
  const AlphaVector alpha = testing::worked_alpha();
  const auto ls = build_line_schedule(jobs, alpha);
  SvgOptions opt;
  opt.duals = true;
  const std::string svg = render_svg(ls.schedule, opt, &jobs, &alpha);
  EXPECT_NE(svg.find("class=\"dual\" data-job=\"0\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"gamma\""), std::string::npos);

  const std::string empty = render_svg(Schedule());
  EXPECT_EQ(empty.find("class=\"job\""), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace sharedres
