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

// Reference masking methods. They generate test pairs and realize the
// constructive scenarios of the permutation view: global and local noise,
// block permutation (which preserves within-block joint distributions
// exactly), direct permutation input, and displacement-bounded permutations.
//
// All methods are deterministic functions of their inputs and seed.

#ifndef PERMAUDIT_ANONYMIZERS_H_
#define PERMAUDIT_ANONYMIZERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "permaudit/microdata.h"
#include "permaudit/permutation.h"

namespace permaudit {

struct NoiseSpec {
  // Per-attribute Gaussian standard deviation, in column order. A single
  // entry applies to every attribute.
  std::vector<double> sigma;
  uint64_t seed = 0;
};

struct BlockSpec {
  // Partition of the attribute names; each block shares one permutation.
  std::vector<std::vector<std::string>> blocks;
  uint64_t seed = 0;
};

struct ExecutionOptions {
  int num_threads = 1;
};

// Y = X + N(0, sigma_j^2) drawn independently per cell.
absl::StatusOr<Dataset> AddNoise(const Dataset& x, const NoiseSpec& spec,
                                 const ExecutionOptions& exec = {});

// Like AddNoise, but only rows listed in `rows` (zero-based) are touched.
// A given cell receives the same draw it would under AddNoise.
absl::StatusOr<Dataset> LocalNoise(const Dataset& x, std::span<const int> rows,
                                   const NoiseSpec& spec,
                                   const ExecutionOptions& exec = {});

// Draws one uniformly random permutation per block and applies it to every
// attribute of the block.
absl::StatusOr<Dataset> BlockPermute(const Dataset& x, const BlockSpec& spec);

// Y_j = X_j permuted by perms[j]. With `noise`, each cell of the permuted
// column gets Gaussian noise clipped to stay strictly inside half the gap to
// its neighbouring order statistics, so no rank changes. Tied cells get no
// noise. Fails with FailedPrecondition if rounding still re-ranks a column.
absl::StatusOr<Dataset> ApplyPermutations(
    const Dataset& x, std::span<const Permutation> perms,
    const std::optional<NoiseSpec>& noise = std::nullopt,
    const ExecutionOptions& exec = {});

// A random permutation with |image[i] - i| <= max_displacement for every i.
//
// Drawn left to right: each row takes an unused original row from the
// window [i - dmax, i + dmax], forced to take i - dmax when that row would
// otherwise become unreachable. The result always satisfies the bound, but
// the distribution over bounded permutations is not uniform.
absl::StatusOr<Permutation> SampleBoundedPermutation(int n,
                                                     int max_displacement,
                                                     uint64_t seed);

// Applies an independent bounded permutation to every attribute. Attribute
// j's permutation is seeded from the (seed, j) substream.
absl::StatusOr<Dataset> BoundedPermute(const Dataset& x, int max_displacement,
                                       uint64_t seed);

}  // namespace permaudit

#endif  // PERMAUDIT_ANONYMIZERS_H_
