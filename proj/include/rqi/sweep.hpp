// Copyright 2026 The rqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RQI_SWEEP_HPP
#define RQI_SWEEP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rqi/fixed_point.hpp"

namespace rqi {

/// Monte-Carlo genericity experiment over Haar-random interaction unitaries.
struct SweepConfig {
  int n = 2;
  int samples = 1;
  std::uint64_t seed = 0;
  std::vector<double> spectrum;
  RankPolicy policy;
  int threads = 0;  // 0: OpenMP default
};

struct SweepRow {
  int index = 0;
  std::uint64_t seed = 0;
  int rank = 0;
  int kernel_dim = 0;
  bool unique = false;
  double spectral_gap = 0.0;
  double residual = 0.0;
  std::string error;  // non-empty when the analysis threw

  bool operator==(const SweepRow&) const = default;
};

struct SweepSummary {
  int samples = 0;
  int unique_count = 0;
  int failures = 0;
  double unique_fraction = 0.0;
  std::map<int, int> rank_histogram;
  double gap_min = 0.0;
  double gap_max = 0.0;
  double gap_mean = 0.0;
};

/// Per-sample seed, a splitmix64 hash of (base, index).
std::uint64_t sample_seed(std::uint64_t base, int index);

/// One sample; used by both drivers.
SweepRow sweep_sample(const SweepConfig& cfg, int index);

/// OpenMP driver; rows are ordered by sample index.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
/// Serial reference driver.
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

SweepSummary summarize(const std::vector<SweepRow>& rows);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace rqi

#endif  // RQI_SWEEP_HPP
