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

// Information-loss measures over pairs of attributes.
//
// Two attributes permuted by the same permutation keep their joint
// distribution exactly, and their displacement vectors coincide. The
// elementwise difference of the two displacement vectors therefore measures
// how much their dependence was altered, regardless of direction.

#ifndef PERMAUDIT_INFOLOSS_H_
#define PERMAUDIT_INFOLOSS_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "permaudit/dominance.h"
#include "permaudit/exponent_grid.h"
#include "permaudit/microdata.h"
#include "permaudit/permutation.h"
#include "permaudit/risk.h"

namespace permaudit {

struct RelativeDisplacement {
  std::string first;
  std::string second;
  // delta[i] = raw_first[i] - raw_second[i]; zeros are kept as zeros.
  std::vector<int> delta;

  int size() const { return static_cast<int>(delta.size()); }
  // "first|second".
  std::string Key() const { return first + "|" + second; }
};

absl::StatusOr<RelativeDisplacement> RelativeDisplacementOf(
    const DisplacementVector& first, const DisplacementVector& second);

// All p(p-1)/2 pairs (j, j') with j < j' in input order.
absl::StatusOr<std::vector<RelativeDisplacement>> AllRelativeDisplacements(
    std::span<const DisplacementVector> displacements);

// Power mean of |delta| with exponent theta >= 1 (or +inf for the largest
// relative displacement). 0 means the pair's dependence is untouched.
absl::StatusOr<double> PairInfoLoss(const RelativeDisplacement& rel,
                                    double theta, bool normalize = false);

absl::StatusOr<std::vector<CurvePoint>> InfoLossCurve(
    const RelativeDisplacement& rel, const ExponentGrid& grid,
    bool normalize = false);

// Outer power mean (exponent pi >= 1) over the per-pair losses. `rels` must
// cover every unordered pair of the attributes it mentions exactly once.
absl::StatusOr<double> DatasetInfoLoss(std::span<const RelativeDisplacement> rels,
                                       double theta, double pi,
                                       bool normalize = false);

// A dominates B when I_A(theta) <= I_B(theta) + tolerance at every grid
// point.
absl::StatusOr<DominanceVerdict> InfoDominance(
    const RelativeDisplacement& a, const RelativeDisplacement& b,
    const ExponentGrid& grid, double tolerance = kDefaultTolerance);

// Compares I(theta, pi) of two sets of pairs over the theta grid at a fixed
// pi. Each side must cover all of its attribute pairs, as in
// DatasetInfoLoss.
absl::StatusOr<DominanceVerdict> DatasetInfoDominance(
    std::span<const RelativeDisplacement> a,
    std::span<const RelativeDisplacement> b, const ExponentGrid& grid,
    double pi = 1, double tolerance = kDefaultTolerance);

// 1 - 6 sum d_i^2 / (n (n^2 - 1)), d_i the rank difference of record i.
absl::StatusOr<double> Spearman(const Ranking& original,
                                const Ranking& reverse_mapped);

}  // namespace permaudit

#endif  // PERMAUDIT_INFOLOSS_H_
