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

#include "rqi/sweep.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <omp.h>

namespace rqi {

std::uint64_t sample_seed(std::uint64_t base, int index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepRow sweep_sample(const SweepConfig& cfg, int index) {
  SweepRow row;
  row.index = index;
  row.seed = sample_seed(cfg.seed, index);
  try {
    const ChannelSpec spec = ChannelSpec::from_spectrum(
        haar_unitary(cfg.n * cfg.n, row.seed), cfg.spectrum);
    const FixedPointReport rep = analyze(spec, cfg.policy);
    row.rank = rep.rank;
    row.kernel_dim = rep.kernel_dim;
    row.unique = rep.unique;
    row.spectral_gap = rep.spectral_gap;
    row.residual = rep.residual;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows(std::max(cfg.samples, 0));
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (int i = 0; i < cfg.samples; ++i) rows[i] = sweep_sample(cfg, i);
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(std::max(cfg.samples, 0));
  for (int i = 0; i < cfg.samples; ++i) rows.push_back(sweep_sample(cfg, i));
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.samples = static_cast<int>(rows.size());
  double gap_sum = 0.0;
  int ok = 0;
  s.gap_min = std::numeric_limits<double>::infinity();
  s.gap_max = -std::numeric_limits<double>::infinity();
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) {
      ++s.failures;
      continue;
    }
    ++ok;
    if (r.unique) ++s.unique_count;
    ++s.rank_histogram[r.rank];
    gap_sum += r.spectral_gap;
    s.gap_min = std::min(s.gap_min, r.spectral_gap);
    s.gap_max = std::max(s.gap_max, r.spectral_gap);
  }
  if (ok == 0) s.gap_min = s.gap_max = 0.0;
  s.gap_mean = ok > 0 ? gap_sum / ok : 0.0;
  s.unique_fraction = s.samples > 0 ? double(s.unique_count) / s.samples : 0.0;
  return s;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "sample,seed,rank,kernel_dim,unique,spectral_gap,residual,error\n";
  for (const SweepRow& r : rows) {
    out << r.index << ',' << r.seed << ',' << r.rank << ',' << r.kernel_dim << ','
        << (r.unique ? 1 : 0) << ',' << r.spectral_gap << ',' << r.residual << ','
        << csv_field(r.error) << '\n';
  }
  return out.str();
}

}  // namespace rqi
