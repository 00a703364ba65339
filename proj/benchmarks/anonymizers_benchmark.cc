// Copyright 2026 The permaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "permaudit/anonymizers.h"
#include "permaudit/microdata.h"

namespace permaudit {
namespace {

Dataset Random(int n, int p) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> value(0, 100);
  std::vector<AttributeColumn> columns;
  for (int j = 0; j < p; ++j) {
    AttributeColumn column{"c" + std::to_string(j), std::vector<double>(n), {}};
    for (double& x : column.values) x = value(rng);
    columns.push_back(std::move(column));
  }
  return *Dataset::Create("bench", std::move(columns));
}

void BM_AddNoise(benchmark::State& state) {
  const Dataset x = Random(static_cast<int>(state.range(0)), 8);
  const ExecutionOptions exec{.num_threads = static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(AddNoise(x, {.sigma = {5}, .seed = 7}, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 8);
}
BENCHMARK(BM_AddNoise)
    ->Args({10000, 1})
    ->Args({100000, 1})
    ->Args({100000, 4})
    ->Unit(benchmark::kMillisecond);

void BM_BlockPermute(benchmark::State& state) {
  const Dataset x = Random(static_cast<int>(state.range(0)), 8);
  const BlockSpec spec{
      .blocks = {{"c0", "c1", "c2"}, {"c3", "c4"}, {"c5"}, {"c6", "c7"}},
      .seed = 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(BlockPermute(x, spec));
  }
}
BENCHMARK(BM_BlockPermute)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SampleBoundedPermutation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int dmax = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleBoundedPermutation(n, dmax, 7));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleBoundedPermutation)
    ->Args({10000, 5})
    ->Args({100000, 50})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace permaudit

BENCHMARK_MAIN();
