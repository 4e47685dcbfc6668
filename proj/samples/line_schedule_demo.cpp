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

// Builds the line schedule of a three-job instance from given dual
// intercepts, then recovers the intercepts from the volumes alone, and
// compares LS against Greedy.

#include <cstdio>

#include "sharedres/sharedres.hpp"

int main() {
  using namespace sharedres;
  const JobSet jobs{Job(1.0, 3.0 / 4.0), Job(4.0, 1.0 / 2.0), Job(6.0, 2.0 / 3.0)};

  const LineSchedule ls =
      build_line_schedule(jobs, {51.0 / 16.0, 39.0 / 16.0, 31.0 / 16.0});
  std::printf("grid:");
  for (double t : ls.grid) std::printf(" %g", t);
  std::printf("\nvolumes:");
  for (double v : ls.volumes) std::printf(" %g", v);
  const DualityQuantities q = duality_quantities(ls);
  std::printf("\nP=%g A=%g B=%g Gamma=%g\n", q.P, q.A, q.B, q.Gamma);

  const AlphaVector alpha = solve_alpha(jobs, std::vector<double>{1.0, 4.0, 6.0});
  std::printf("recovered alpha: %.12g %.12g %.12g\n", alpha[0], alpha[1], alpha[2]);

  const Schedule g = greedy(jobs);
  const Bounds b = lower_bounds(jobs, fractional_completion_time(jobs, ls.schedule).total);
  std::printf("C(LS)=%g C(Greedy)=%g  C_A=%g C_L=%g LB3=%g\n",
              total_completion_time(jobs, ls.schedule), total_completion_time(jobs, g),
              b.c_a, b.c_l, *b.lb3);
  return 0;
}
