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

#include "permaudit/exponent_grid.h"

#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "permaudit/power_mean.h"
#include "testing/status_matchers.h"

namespace permaudit {
namespace {

using ::permaudit::testing::StatusIs;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(ExponentGridTest, Defaults) {
  EXPECT_THAT(ExponentGrid::DefaultRisk().Points(),
              ElementsAre(-kInfinity, -8, -4, -2, -1, -0.5, 0, 0.5, 1));
  EXPECT_THAT(ExponentGrid::DefaultInfoLoss().Points(),
              ElementsAre(1, 1.5, 2, 3, 4, 8, kInfinity));
}

TEST(ExponentGridTest, ParsesRangesAndLimits) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      ExponentGrid g, ExponentGrid::Parse(MeasureKind::kRisk, "-2:1:0.5", true));
  EXPECT_THAT(g.Points(), ElementsAre(-kInfinity, -2, -1.5, -1, -0.5, 0, 0.5, 1));
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      g, ExponentGrid::Parse(MeasureKind::kRisk, "0.5", false));
  EXPECT_THAT(g.Points(), ElementsAre(0.5));
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      g, ExponentGrid::Parse(MeasureKind::kRisk, "1,-inf,0", false));
  EXPECT_THAT(g.Points(), ElementsAre(-kInfinity, 0, 1));
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      g, ExponentGrid::Parse(MeasureKind::kInfoLoss, "1:1.3:0.1,+inf", false));
  EXPECT_THAT(g.Points(), ElementsAre(1, 1.1, 1.2, 1.3, kInfinity));
}

TEST(ExponentGridTest, RejectsOutOfRangeExponents) {
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kRisk, "0,1.5", true),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("<= 1")));
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kInfoLoss, "0.5", true),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr(">= 1")));
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kRisk, "+inf", false),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kRisk, "1:0:0.5", false),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kRisk, "x", false),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ExponentGrid::Parse(MeasureKind::kRisk, "", false),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("empty")));
}

TEST(ExponentGridTest, FormatsLimits) {
  EXPECT_EQ(FormatExponent(-kInfinity), "-inf");
  EXPECT_EQ(FormatExponent(kInfinity), "+inf");
  EXPECT_EQ(FormatExponent(-0.5), "-0.5");
  EXPECT_EQ(FormatExponent(4), "4");
}

}  // namespace
}  // namespace permaudit
