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
#include <vector>

#include <benchmark/benchmark.h>

#include "permaudit/permutation.h"
#include "permaudit/power_mean.h"
#include "permaudit/risk.h"

namespace permaudit {
namespace {

std::vector<double> Values(int n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> value(1e-8, 1e4);
  std::vector<double> v(n);
  for (double& x : v) x = value(rng);
  return v;
}

void BM_PowerMean(benchmark::State& state) {
  const std::vector<double> v = Values(static_cast<int>(state.range(0)));
  const double exponent = static_cast<double>(state.range(1)) / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PowerMean(v, exponent));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PowerMean)
    ->ArgsProduct({{1 << 10, 1 << 16, 1 << 20}, {-8, -1, 0, 1, 2}});

void BM_AttributeRisk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = (i * 7919 + 13) % n;
  const Permutation p = *Permutation::FromImage(image);
  const DisplacementVector d = Displacement(p, "x");
  for (auto _ : state) {
    benchmark::DoNotOptimize(AttributeRisk(d, -4));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_AttributeRisk)->Arg(1 << 12)->Arg(1 << 18);

}  // namespace
}  // namespace permaudit

BENCHMARK_MAIN();
