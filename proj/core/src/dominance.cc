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

#include "permaudit/dominance.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace permaudit {

absl::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kADominatesB:
      return "A_dominates_B";
    case Relation::kBDominatesA:
      return "B_dominates_A";
    case Relation::kEquivalent:
      return "equivalent";
    case Relation::kCrossing:
      return "crossing";
  }
  return "unknown";
}

absl::StatusOr<DominanceVerdict> CompareOnGrid(const ExponentGrid& grid,
                                               std::span<const double> a,
                                               std::span<const double> b,
                                               Preference preference,
                                               double tolerance) {
  const std::vector<double> points = grid.Points();
  if (a.size() != points.size() || b.size() != points.size()) {
    return absl::InvalidArgumentError(
        "curve lengths do not match the grid size");
  }
  if (!(tolerance >= 0)) {
    return absl::InvalidArgumentError("tolerance must be nonnegative");
  }

  DominanceVerdict verdict;
  verdict.points = points;
  verdict.values_a.assign(a.begin(), a.end());
  verdict.values_b.assign(b.begin(), b.end());

  bool a_wins_somewhere = false;
  bool b_wins_somewhere = false;
  int last_sign = 0;
  double last_point = 0;
  for (size_t k = 0; k < points.size(); ++k) {
    const double advantage =
        preference == Preference::kHigherIsBetter ? a[k] - b[k] : b[k] - a[k];
    int sign = 0;
    if (advantage > tolerance) sign = 1;
    if (advantage < -tolerance) sign = -1;
    if (sign == 0) continue;
    (sign > 0 ? a_wins_somewhere : b_wins_somewhere) = true;
    if (last_sign != 0 && sign != last_sign) {
      verdict.crossing_points.push_back(points[k]);
      verdict.flip_intervals.push_back({last_point, points[k]});
    }
    last_sign = sign;
    last_point = points[k];
  }

  if (a_wins_somewhere && b_wins_somewhere) {
    verdict.relation = Relation::kCrossing;
  } else if (a_wins_somewhere) {
    verdict.relation = Relation::kADominatesB;
  } else if (b_wins_somewhere) {
    verdict.relation = Relation::kBDominatesA;
  } else {
    verdict.relation = Relation::kEquivalent;
  }
  return verdict;
}

}  // namespace permaudit
