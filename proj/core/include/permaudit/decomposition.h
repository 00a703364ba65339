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

// Reverse mapping: rewrites a masked dataset Y as per-attribute permutations
// of the original X plus a residual that never changes ranks.
//
//   Y_j = P_j X_j + E_j   for every attribute j
//
// The reverse-mapped dataset Z holds X's values reordered to follow Y's
// ranks, so Z_j has exactly X_j's marginal distribution and E = Y - Z.
//
// Displacements are taken in the row order of the input files. Relabeling
// rows of the released file changes the multiset of displacements.

#ifndef PERMAUDIT_DECOMPOSITION_H_
#define PERMAUDIT_DECOMPOSITION_H_

#include <iosfwd>
#include <vector>

#include "absl/status/statusor.h"
#include "permaudit/microdata.h"
#include "permaudit/permutation.h"

namespace permaudit {

struct Decomposition {
  Dataset reverse_mapped;
  // residuals[j][i] = Y_j(i) - Z_j(i) for numeric attributes. For ordered
  // categorical attributes the entry is 0 when the levels agree and 1 when
  // they differ.
  std::vector<std::vector<double>> residuals;
  std::vector<Ranking> original_ranks;
  std::vector<Ranking> masked_ranks;
  std::vector<Permutation> permutations;
  std::vector<DisplacementVector> displacements;

  // Total tie groups broken while ranking the original and masked data.
  int TieEvents() const;
  std::vector<NamedPermutation> NamedPermutations() const;
};

struct ReverseMapOptions {
  RankDirection direction = RankDirection::kDescending;
  int num_threads = 1;
};

absl::StatusOr<Decomposition> ReverseMap(const PairedDatasets& pair,
                                         const ReverseMapOptions& options = {});

// Residuals in the dataset text format; categorical attributes are written
// as "same" or "different".
void WriteResiduals(const Decomposition& decomposition, std::ostream& out);

}  // namespace permaudit

#endif  // PERMAUDIT_DECOMPOSITION_H_
