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

#include "permaudit/permutation.h"

#include <random>
#include <sstream>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "permaudit/running_example.h"
#include "testing/oracles.h"
#include "testing/status_matchers.h"

namespace permaudit {
namespace {

using ::permaudit::testing::StatusIs;
using ::testing::DoubleEq;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

Permutation OneBased(std::vector<int> image) {
  return *Permutation::FromOneBasedImage(image);
}

Ranking MakeRanking(std::vector<int> ranks,
                    RankDirection dir = RankDirection::kDescending) {
  return Ranking{"a", std::move(ranks), dir, 0};
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THAT(Permutation::FromOneBasedImage(std::vector<int>{1, 1, 2}),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("repeats")));
  EXPECT_THAT(Permutation::FromOneBasedImage(std::vector<int>{1, 4, 2}),
              StatusIs(absl::StatusCode::kInvalidArgument,
                       HasSubstr("outside")));
}

TEST(PermutationTest, InverseIsAnInvolution) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    Permutation p = *Permutation::FromImage(testing::RandomImage(n, rng));
    EXPECT_EQ(p.Inverse().Inverse(), p);
    for (int i = 0; i < n; ++i) EXPECT_EQ(p.Inverse()[p[i]], i);
  }
}

TEST(ExtractPermutationTest, RecoversSecondAttribute) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      Permutation p, ExtractPermutation(MakeRanking({3, 5, 4, 1, 2}),
                                        MakeRanking({2, 5, 4, 3, 1})));
  EXPECT_THAT(p.OneBasedImage(), ElementsAre(5, 2, 3, 1, 4));
}

TEST(ExtractPermutationTest, EqualRankingsGiveIdentity) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      Permutation p, ExtractPermutation(MakeRanking({4, 2, 5, 3, 1}),
                                        MakeRanking({4, 2, 5, 3, 1})));
  EXPECT_TRUE(p.IsIdentity());
}

TEST(ExtractPermutationTest, RejectsDirectionMismatch) {
  EXPECT_THAT(
      ExtractPermutation(MakeRanking({1, 2}),
                         MakeRanking({1, 2}, RankDirection::kAscending)),
      StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("direction")));
}

TEST(ExtractPermutationTest, RejectsLengthMismatch) {
  EXPECT_THAT(ExtractPermutation(MakeRanking({1, 2}), MakeRanking({1, 2, 3})),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("length")));
}

TEST(DisplacementTest, SecondAttribute) {
  DisplacementVector d = Displacement(OneBased({5, 2, 3, 1, 4}), "V2");
  EXPECT_THAT(d.raw, ElementsAre(3, 0, 0, 1, -4));
  EXPECT_EQ(d.attribute, "V2");
}

TEST(DisplacementTest, ThirdAttribute) {
  EXPECT_THAT(Displacement(OneBased({1, 4, 5, 2, 3})).raw,
              ElementsAre(0, 2, 2, -2, -2));
}

TEST(DisplacementTest, IdentityIsAllZero) {
  EXPECT_THAT(Displacement(Permutation::Identity(5)).raw,
              ElementsAre(0, 0, 0, 0, 0));
}

TEST(DisplacementTest, LocalMatrixByHand) {
  // 1s at (1,1), (2,2), (3,5), (4,4), (5,3).
  EXPECT_THAT(Displacement(OneBased({1, 2, 5, 4, 3})).raw,
              ElementsAre(0, 0, 2, 0, -2));
}

// Counts, column by column, how far the 1 sits below the diagonal directly
// from the dense matrix.
std::vector<int> DisplacementFromMatrix(const PermutationMatrix& m) {
  std::vector<int> raw(m.size());
  for (int col = 0; col < m.size(); ++col) {
    for (int row = 0; row < m.size(); ++row) {
      if (m.at(row, col) == 1) raw[col] = row - col;
    }
  }
  return raw;
}

TEST(DisplacementTest, InvariantsOnRandomPermutations) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 25)(rng);
    Permutation p = *Permutation::FromImage(testing::RandomImage(n, rng));
    DisplacementVector d = Displacement(p);
    PermutationMatrix m = ToMatrix(p);
    int sum = 0;
    for (int r : d.raw) {
      sum += r;
      ASSERT_LE(std::abs(r), n - 1);
    }
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(d.ZeroCount(), m.Trace());
    EXPECT_EQ(d.raw, DisplacementFromMatrix(m));
  }
}

TEST(ToMatrixTest, MatchesPublishedMatrices) {
  EXPECT_EQ(ToMatrix(OneBased({5, 2, 3, 1, 4})).ToString(),
            "0 0 0 0 1\n"
            "0 1 0 0 0\n"
            "0 0 1 0 0\n"
            "1 0 0 0 0\n"
            "0 0 0 1 0\n");
  EXPECT_EQ(ToMatrix(OneBased({1, 4, 5, 2, 3})).ToString(),
            "1 0 0 0 0\n"
            "0 0 0 1 0\n"
            "0 0 0 0 1\n"
            "0 1 0 0 0\n"
            "0 0 1 0 0\n");
  PermutationMatrix identity = ToMatrix(Permutation::Identity(4));
  EXPECT_EQ(identity.Trace(), 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(identity.at(i, j), i == j);
  }
}

TEST(EpsilonizeTest, SubstitutesZeros) {
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(
      std::vector<double> v, Epsilonize({"a", {3, 0, 0, 1, -4}}, 1e-8));
  EXPECT_THAT(v, ElementsAre(3, 1e-8, 1e-8, 1, 4));
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(v, Epsilonize({"a", {0, 0, 2, 0, -2}}, 1e-8));
  EXPECT_THAT(v, ElementsAre(1e-8, 1e-8, 2, 1e-8, 2));
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(v, Epsilonize({"a", {0, 0, 0}}, 0.5));
  EXPECT_THAT(v, ElementsAre(0.5, 0.5, 0.5));
}

TEST(EpsilonizeTest, RejectsNonPositiveEpsilon) {
  EXPECT_THAT(Epsilonize({"a", {1, -1}}, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(Epsilonize({"a", {1, -1}}, -1e-8),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(PermutationFileTest, RoundTrips) {
  std::vector<NamedPermutation> perms = {
      {"V1", Permutation::Identity(5)},
      {"V2", OneBased({5, 2, 3, 1, 4})},
      {"V3", OneBased({1, 4, 5, 2, 3})},
  };
  std::ostringstream out;
  WritePermutations(perms, out);
  EXPECT_EQ(out.str(), "V1: 1 2 3 4 5\nV2: 5 2 3 1 4\nV3: 1 4 5 2 3\n");
  std::istringstream in("# comment\n\n" + out.str());
  PERMAUDIT_ASSERT_OK_AND_ASSIGN(std::vector<NamedPermutation> again,
                                 ReadPermutations(in));
  ASSERT_EQ(again.size(), 3u);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(again[j].attribute, perms[j].attribute);
    EXPECT_EQ(again[j].permutation, perms[j].permutation);
  }
}

TEST(PermutationFileTest, RejectsMalformedLines) {
  std::istringstream missing_colon("V1 1 2 3\n");
  EXPECT_THAT(ReadPermutations(missing_colon),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("line 1")));
  std::istringstream not_bijection("V1: 1 2 2\n");
  EXPECT_THAT(ReadPermutations(not_bijection),
              StatusIs(absl::StatusCode::kInvalidArgument, HasSubstr("V1")));
  std::istringstream junk("V1: 1 x 2\n");
  EXPECT_THAT(ReadPermutations(junk),
              StatusIs(absl::StatusCode::kInvalidArgument,
                       HasSubstr("not an integer")));
}

}  // namespace
}  // namespace permaudit
