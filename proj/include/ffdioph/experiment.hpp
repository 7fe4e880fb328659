// Copyright 2026 The ffdioph Authors
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

#ifndef FFDIOPH_EXPERIMENT_HPP_
#define FFDIOPH_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ffdioph/report.hpp"
#include "ffdioph/testfn.hpp"

namespace ffdioph {

// Shared knob bag for the experiment drivers.  Each driver reads the subset
// it cares about; unused fields are ignored.  Reports echo the fields that
// actually shaped the run, and never anything that merely parallelizes it
// (worker counts do not appear): a configuration and a seed determine the
// report bytes.
struct ExperimentConfig {
  uint32_t q = 2;
  std::string q0 = "1";             // denominator congruence modulus
  std::string phi = "preset:divlog";
  uint64_t seed = 42;
  int trials = 1000;

  // khintchine
  int d_max = 200;     // last reported window depth
  int d_far = 0;       // 0 = no increment section; else count hits in (d_max, d_far]
  int tail_min_count = 5;  // the m of the "at least m solutions" fraction

  // digitstats
  int digits_per_trial = 100;
  int max_digit_checked = 5;

  // loglaw: digit-count rungs, ascending
  std::vector<int> rungs = {256, 1024, 2048, 16384};

  // counting
  int depth_top = 5;
  int group_n_max = 4;
  int parabolic_n_max = 12;

  // shadow
  int shadow_deg_max = 4;
  int shadow_t_max = 4;

  // quasi
  int window_lo = 2;
  int window_hi = 8;

  uint64_t budget = 1ull << 22;  // orbit enumeration cap
  int workers = 0;               // 0 = $FFDIOPH_WORKERS, else 1
};

// Parses a test-function spec: "preset:NAME", a bare preset name,
// "custom:C,a,b[,t0[,cap]]" (phi-side) or "psi:C,a,b[,t0[,cap]]"
// (time-side).  Fails with kUsage on anything else.
TestFunction ParsePhiSpec(const std::string& spec, uint32_t q);

// Worker-count resolution: explicit request wins, then $FFDIOPH_WORKERS,
// then 1.
int ResolveWorkers(int requested);

// Random targets, exact window measures: per degree window the empirical
// mean number of orbit solutions against count(d) * q^-k(d), plus the
// far-window increment statistics when d_far > d_max.
Json RunKhintchine(const ExperimentConfig& cfg);

// Extremal statistics of the expansion: per rung N the running maximum
// digit degree M_N and the running maximum of peak / ln(entry time).
Json RunLoglaw(const ExperimentConfig& cfg);

// Digit-degree frequencies against the exact law (q-1) q^-k.
Json RunDigitStats(const ExperimentConfig& cfg);

// Orbit cardinalities per window, group-ball and parabolic-ball growth,
// and the fitted log-slopes.
Json RunCounting(const ExperimentConfig& cfg);

// Exhaustive check that every thickened shadow has measure q^-(D+t).
Json RunShadowCheck(const ExperimentConfig& cfg);

// Pairwise intersection ratios mu(An ∩ Am) / (mu(An) mu(Am)) across a range
// of windows, plus the sum-vs-integral comparison.
Json RunQuasiIndependence(const ExperimentConfig& cfg);

}  // namespace ffdioph

#endif  // FFDIOPH_EXPERIMENT_HPP_
