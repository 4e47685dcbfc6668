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

// Stacked-area SVG rendering of schedules: time on x, resource on y, one
// colour per job, jobs stacked in id order inside every constant interval.

#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "sharedres/core.hpp"
#include "sharedres/linesched.hpp"

namespace sharedres {

inline constexpr std::array<const char*, 12> kJobPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#17becf"};

struct SvgOptions {
  int width = 800;
  int height = 400;
  int margin = 40;
  /// Overlay dual lines d_j(t) and gamma(t); needs jobs and alpha.
  bool duals = false;
};

struct SvgRect {
  std::size_t job;
  double x, y, w, h;  // pixels
};

/// Geometry of the stacked areas, separated from the text output for tests.
struct SvgRender {
  int width = 0;
  int height = 0;
  double horizon = 0.0;   // time shown at the right edge of the plot area
  double x_scale = 0.0;   // pixels per time unit
  double y_scale = 0.0;   // pixels per unit of resource
  std::vector<SvgRect> rects;
};

inline SvgRender layout_schedule(const Schedule& sched, const SvgOptions& opt = {}) {
  SvgRender g;
  g.width = opt.width;
  g.height = opt.height;
  const std::vector<double> grid = sched.common_breakpoints();
  g.horizon = grid.empty() ? 1.0 : grid.back();
  const double pw = opt.width - 2.0 * opt.margin;
  const double ph = opt.height - 2.0 * opt.margin;
  g.x_scale = pw / g.horizon;
  g.y_scale = ph;
  const double base = opt.height - opt.margin;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    double stack = 0.0;
    for (std::size_t j = 0; j < sched.size(); ++j) {
      const double r = sched[j](grid[k]);
      if (r <= 0.0) continue;
      SvgRect rect{j, opt.margin + grid[k] * g.x_scale,
                   base - (stack + r) * g.y_scale,
                   (grid[k + 1] - grid[k]) * g.x_scale, r * g.y_scale};
      g.rects.push_back(rect);
      stack += r;
    }
  }
  return g;
}

inline std::string render_svg(const Schedule& sched, const SvgOptions& opt = {},
                              const JobSet* jobs = nullptr,
                              const std::vector<double>* alpha = nullptr) {
  const SvgRender g = layout_schedule(sched, opt);
  char buf[256];
  std::string s;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                g.width, g.height, g.width, g.height);
  s += buf;
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double x0 = opt.margin;
  const double x1 = opt.width - opt.margin;
  const double y0 = opt.height - opt.margin;
  const double y1 = opt.margin;
  for (const SvgRect& r : g.rects) {
    std::snprintf(buf, sizeof buf,
                  "<rect class=\"job\" data-job=\"%zu\" x=\"%.3f\" y=\"%.3f\" "
                  "width=\"%.3f\" height=\"%.3f\" fill=\"%s\"/>\n",
                  r.job, r.x, r.y, r.w, r.h,
                  kJobPalette[r.job % kJobPalette.size()]);
    s += buf;
  }
  // Axes and the unit-resource line.
  std::snprintf(buf, sizeof buf,
                "<path d=\"M%.3f %.3f H%.3f M%.3f %.3f V%.3f\" stroke=\"black\" "
                "fill=\"none\"/>\n",
                x0, y0, x1, x0, y0, y1 - 10.0);
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<line class=\"unit\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" "
                "y2=\"%.3f\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
                x0, y1, x1, y1);
  s += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.3f\" y=\"%.3f\" font-size=\"11\" "
                "text-anchor=\"end\">1</text>\n"
                "<text x=\"%.3f\" y=\"%.3f\" font-size=\"11\" "
                "text-anchor=\"end\">%.6g</text>\n",
                x0 - 4.0, y1 + 4.0, x1, y0 + 16.0, g.horizon);
  s += buf;

  if (opt.duals && jobs != nullptr && alpha != nullptr && !jobs->empty()) {
    // Dual values share the plot height, scaled to the largest intercept.
    const double top = *std::max_element(alpha->begin(), alpha->end());
    if (top > 0.0) {
      const double vy = (y0 - y1) / top;
      for (std::size_t j = 0; j < jobs->size(); ++j) {
        const double end = std::min(g.horizon, (*alpha)[j] * (*jobs)[j].volume());
        std::snprintf(buf, sizeof buf,
                      "<line class=\"dual\" data-job=\"%zu\" x1=\"%.3f\" "
                      "y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"%s\" "
                      "stroke-width=\"2\"/>\n",
                      j, x0, y0 - (*alpha)[j] * vy, x0 + end * g.x_scale,
                      y0 - dual_line((*jobs)[j], (*alpha)[j], end) * vy,
                      kJobPalette[j % kJobPalette.size()]);
        s += buf;
      }
      const LineSchedule ls = build_line_schedule(*jobs, *alpha);
      if (!ls.gamma.empty()) {
        s += "<polyline class=\"gamma\" fill=\"none\" stroke=\"black\" "
             "stroke-dasharray=\"2 2\" points=\"";
        auto bps = ls.gamma.breakpoints();
        auto st = ls.gamma.start_values();
        auto sl = ls.gamma.slopes();
        for (std::size_t k = 0; k < st.size(); ++k) {
          const double len = bps[k + 1] - bps[k];
          std::snprintf(buf, sizeof buf, "%.3f,%.3f %.3f,%.3f ",
                        x0 + bps[k] * g.x_scale, y0 - st[k] * vy,
                        x0 + bps[k + 1] * g.x_scale,
                        y0 - (st[k] + sl[k] * len) * vy);
          s += buf;
        }
        s += "\"/>\n";
      }
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace sharedres
