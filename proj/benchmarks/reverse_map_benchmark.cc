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

#include "permaudit/decomposition.h"
#include "permaudit/microdata.h"

namespace permaudit {
namespace {

Dataset Random(int n, int p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> value(0, 100);
  std::vector<AttributeColumn> columns;
  for (int j = 0; j < p; ++j) {
    AttributeColumn column{"c" + std::to_string(j), std::vector<double>(n), {}};
    for (double& x : column.values) x = value(rng);
    columns.push_back(std::move(column));
  }
  return *Dataset::Create("bench", std::move(columns));
}

// Arguments: records, attributes, threads.
void BM_ReverseMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const PairedDatasets pair = *Pair(Random(n, p, 1), Random(n, p, 2));
  const ReverseMapOptions options{
      .num_threads = static_cast<int>(state.range(2))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReverseMap(pair, options));
  }
  state.SetItemsProcessed(state.iterations() * n * p);
}
BENCHMARK(BM_ReverseMap)
    ->Args({1000, 8, 1})
    ->Args({100000, 8, 1})
    ->Args({100000, 8, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace permaudit

BENCHMARK_MAIN();
