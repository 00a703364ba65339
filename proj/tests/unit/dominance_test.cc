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

#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "permaudit/power_mean.h"
#include "testing/status_matchers.h"

namespace permaudit {
namespace {

using ::permaudit::testing::StatusIs;
using ::testing::ElementsAre;

ExponentGrid InfoGrid() {
  return *ExponentGrid::Create(MeasureKind::kInfoLoss, {1, 2, 3}, false);
}

TEST(RelationNameTest, Names) {
  EXPECT_EQ(RelationName(Relation::kADominatesB), "A_dominates_B");
  EXPECT_EQ(RelationName(Relation::kBDominatesA), "B_dominates_A");
  EXPECT_EQ(RelationName(Relation::kEquivalent), "equivalent");
  EXPECT_EQ(RelationName(Relation::kCrossing), "crossing");
}

TEST(CompareOnGridTest, DirectionOfPreference) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {2, 3, 4};
  EXPECT_EQ(CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 0)
                ->relation,
            Relation::kADominatesB);
  EXPECT_EQ(CompareOnGrid(InfoGrid(), a, b, Preference::kHigherIsBetter, 0)
                ->relation,
            Relation::kBDominatesA);
}

TEST(CompareOnGridTest, WeakDominanceAllowsTies) {
  const std::vector<double> a = {1, 3, 3};
  const std::vector<double> b = {2, 3, 3};
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      DominanceVerdict v,
      CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 0));
  EXPECT_EQ(v.relation, Relation::kADominatesB);
  EXPECT_TRUE(v.crossing_points.empty());
  EXPECT_THAT(v.points, ElementsAre(1, 2, 3));
}

TEST(CompareOnGridTest, ToleranceAbsorbsSmallDifferences) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {1 + 1e-10, 2 - 1e-10, 3};
  EXPECT_EQ(CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 1e-9)
                ->relation,
            Relation::kEquivalent);
  EXPECT_EQ(CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 0)
                ->relation,
            Relation::kCrossing);
}

TEST(CompareOnGridTest, CrossingSkipsTiedPoints) {
  // Strict winner goes A, tie, B: the flip spans the tie.
  const std::vector<double> a = {1, 2, 5};
  const std::vector<double> b = {2, 2, 4};
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      DominanceVerdict v,
      CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 0));
  EXPECT_EQ(v.relation, Relation::kCrossing);
  EXPECT_THAT(v.crossing_points, ElementsAre(3));
  ASSERT_EQ(v.flip_intervals.size(), 1u);
  EXPECT_EQ(v.flip_intervals[0].lower, 1);
  EXPECT_EQ(v.flip_intervals[0].upper, 3);
}

TEST(CompareOnGridTest, MultipleCrossings) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      ExponentGrid grid,
      ExponentGrid::Create(MeasureKind::kRisk, {-2, -1, 0, 1}, true));
  const std::vector<double> a = {0, 1, 0, 1, 0};
  const std::vector<double> b = {0, 0, 1, 0, 1};
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      DominanceVerdict v,
      CompareOnGrid(grid, a, b, Preference::kHigherIsBetter, 0));
  EXPECT_EQ(v.relation, Relation::kCrossing);
  EXPECT_THAT(v.crossing_points, ElementsAre(-1, 0, 1));
  ASSERT_EQ(v.flip_intervals.size(), 3u);
  EXPECT_EQ(v.flip_intervals[0].lower, -2);
}

TEST(CompareOnGridTest, LimitPointParticipates) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      ExponentGrid grid,
      ExponentGrid::Create(MeasureKind::kInfoLoss, {1}, true));
  const std::vector<double> a = {1, 3};
  const std::vector<double> b = {2, 2};
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      DominanceVerdict v,
      CompareOnGrid(grid, a, b, Preference::kLowerIsBetter, 0));
  EXPECT_THAT(v.crossing_points, ElementsAre(kInfinity));
}

TEST(CompareOnGridTest, Errors) {
  const std::vector<double> a = {1, 2};
  const std::vector<double> b = {1, 2, 3};
  EXPECT_THAT(CompareOnGrid(InfoGrid(), a, b, Preference::kLowerIsBetter, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(CompareOnGrid(InfoGrid(), b, b, Preference::kLowerIsBetter, -1),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

}  // namespace
}  // namespace permaudit
