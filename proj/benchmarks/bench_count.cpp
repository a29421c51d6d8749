// Copyright 2026 The Lozenge Authors
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

#include <benchmark/benchmark.h>

#include "lozenge/count.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/regions.hpp"

namespace {

using namespace lozenge;

void BM_SweepHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_region(RegionSpec::hex(n, n, n));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_SweepHexagon)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_OracleHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region r = build_region(RegionSpec::hex(n, n, n));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings_oracle(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_OracleHexagon)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_SweepWeightedHalvedHexagon(benchmark::State& state) {
  const int x = static_cast<int>(state.range(0));
  const Region r = build_region(RegionSpec::dented(Family::W, x, x, {2, 3}, {1, 4}, {5}));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
  state.counters["cells"] = static_cast<double>(r.size());
}
BENCHMARK(BM_SweepWeightedHalvedHexagon)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_SymmetricReduce(benchmark::State& state) {
  const int x = static_cast<int>(state.range(0));
  const RegionSpec rs = RegionSpec::dented(Family::RS, x, 1, {1}, {2});
  for (auto _ : state) benchmark::DoNotOptimize(count_reflective(rs, ReflectiveMethod::Reduce));
}
BENCHMARK(BM_SymmetricReduce)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_SymmetricFilter(benchmark::State& state) {
  const RegionSpec rs = RegionSpec::dented(Family::RS, 2, 1, {1}, {2});
  for (auto _ : state) benchmark::DoNotOptimize(count_reflective(rs, ReflectiveMethod::Filter));
}
BENCHMARK(BM_SymmetricFilter)->Unit(benchmark::kMillisecond);

void BM_ShuffleRatioFormula(benchmark::State& state) {
  const RatioSpec r{RatioFamily::W, {1, 4, 6, 9}, {2, 4, 7}, {2, 4, 6, 7}, {1, 4, 9}, 3};
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_ratio(r));
}
BENCHMARK(BM_ShuffleRatioFormula);

}  // namespace

BENCHMARK_MAIN();
