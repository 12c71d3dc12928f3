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


// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rqi/circulant.hpp"
#include "rqi/sweep.hpp"

namespace {

rqi::SweepConfig sweep_config(int n, int samples) {
  rqi::SweepConfig cfg;
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = 1;
  cfg.spectrum = n == 2 ? std::vector<double>{0.7, 0.3} : std::vector<double>{0.5, 0.3, 0.2};
  return cfg;
}

void BM_SweepParallel(benchmark::State& state) {
  const rqi::SweepConfig cfg = sweep_config(static_cast<int>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(rqi::run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepSerial(benchmark::State& state) {
  const rqi::SweepConfig cfg = sweep_config(static_cast<int>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(rqi::run_sweep_serial(cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SweepSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

std::vector<rqi::Complex> phases(int n) { return rqi::generic_phases(n, 1, 1e-6).values; }

void BM_MarginParallel(benchmark::State& state) {
  const std::vector<rqi::Complex> u = phases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rqi::phase_margin(u));
}
BENCHMARK(BM_MarginParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MarginSerial(benchmark::State& state) {
  const std::vector<rqi::Complex> u = phases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rqi::phase_margin_serial(u));
}
BENCHMARK(BM_MarginSerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
