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

// Grid-based dominance verdicts between two masking methods.
//
// Dominance quantifies over a continuum of aversion levels; here it is
// decided on a finite grid plus the analytic limit endpoints, and each
// verdict carries the grid it was decided on. Dominance is weak: ties
// within tolerance are allowed at any point.

#ifndef PERMAUDIT_DOMINANCE_H_
#define PERMAUDIT_DOMINANCE_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "permaudit/exponent_grid.h"

namespace permaudit {

enum class Relation {
  kADominatesB,
  kBDominatesA,
  kEquivalent,
  kCrossing,
};

absl::string_view RelationName(Relation relation);

enum class Preference {
  kHigherIsBetter,  // disclosure-risk measures: more displacement protects
  kLowerIsBetter,   // information-loss measures
};

// The comparison changes sign somewhere in (lower, upper]: lower is the last
// grid point where one side was strictly better, upper the first point where
// the other side is.
struct FlipInterval {
  double lower;
  double upper;
};

struct DominanceVerdict {
  Relation relation = Relation::kEquivalent;
  // Grid exponents at which the strict winner changes. Nonempty iff
  // relation == kCrossing.
  std::vector<double> crossing_points;
  std::vector<FlipInterval> flip_intervals;
  std::vector<double> points;
  std::vector<double> values_a;
  std::vector<double> values_b;
};

// Compares two curves evaluated on `grid.Points()`. A point counts as a tie
// when |a - b| <= tolerance.
absl::StatusOr<DominanceVerdict> CompareOnGrid(const ExponentGrid& grid,
                                               std::span<const double> a,
                                               std::span<const double> b,
                                               Preference preference,
                                               double tolerance);

}  // namespace permaudit

#endif  // PERMAUDIT_DOMINANCE_H_
