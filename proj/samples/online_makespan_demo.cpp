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

// Runs c-WaterFill on the adversarial family for two values of c.

#include <cstdio>

#include "sharedres/sharedres.hpp"

int main() {
  using namespace sharedres;
  const JobSet jobs = adversarial_instance(500);
  for (double c : {1.55, kWaterfillRatio}) {
    const OnlineRun run = waterfill_online(jobs, c);
    if (run.failure) {
      std::printf("c=%.6f: job %zu misses its deadline (deficit %.3g)\n", c,
                  run.failure->job, run.failure->deficit);
    } else {
      std::printf("c=%.6f: all %zu jobs placed, makespan %.6f, M*=%.6f\n", c,
                  run.schedule.size(), makespan(run.schedule),
                  optimal_makespan(jobs).value);
    }
  }
  return 0;
}
