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

#include "permaudit/decomposition.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "permaudit/anonymizers.h"
#include "permaudit/running_example.h"
#include "testing/oracles.h"
#include "testing/status_matchers.h"

namespace permaudit {
namespace {

using ::testing::ElementsAre;

Decomposition Decompose(const Dataset& x, const Dataset& y,
                        const ReverseMapOptions& options = {}) {
  absl::StatusOr<PairedDatasets> pair = Pair(x, y);
  EXPECT_TRUE(pair.ok()) << pair.status();
  absl::StatusOr<Decomposition> d = ReverseMap(*pair, options);
  EXPECT_TRUE(d.ok()) << d.status();
  return *std::move(d);
}

TEST(ReverseMapTest, RunningExampleMatchesPublishedTables) {
  Decomposition d =
      Decompose(running_example::Original(), running_example::Masked());
  const Dataset& z = d.reverse_mapped;
  EXPECT_THAT(z.column(0).values, ElementsAre(13, 20, 2, 15, 29));
  EXPECT_THAT(z.column(1).values, ElementsAre(160, 52, 123, 135, 165));
  EXPECT_THAT(z.column(2).values, ElementsAre(3707, 2419, -1008, 826, -1317));
  EXPECT_THAT(d.residuals[0], ElementsAre(-5, 0, -3, 3, 0));
  EXPECT_THAT(d.residuals[1], ElementsAre(0, 5, -1, 0, -1));
  EXPECT_THAT(d.residuals[2], ElementsAre(-459, -1597, 1256, -229, -610));
  EXPECT_EQ(d.permutations, running_example::Permutations());
  EXPECT_THAT(d.displacements[1].raw, ElementsAre(3, 0, 0, 1, -4));
  EXPECT_THAT(d.displacements[2].raw, ElementsAre(0, 2, 2, -2, -2));
  EXPECT_EQ(d.TieEvents(), 0);
}

TEST(ReverseMapTest, IdentityPair) {
  const Dataset x = running_example::Original();
  Decomposition d = Decompose(x, x);
  EXPECT_EQ(d.reverse_mapped, x);
  for (const auto& e : d.residuals) {
    EXPECT_THAT(e, ElementsAre(0, 0, 0, 0, 0));
  }
  for (const Permutation& p : d.permutations) EXPECT_TRUE(p.IsIdentity());
}

TEST(ReverseMapTest, LocalMaskingLeavesUnmaskedRecordsAlone) {
  Decomposition d =
      Decompose(running_example::Original(), running_example::LocallyMasked());
  EXPECT_TRUE(d.permutations[0].IsIdentity());
  EXPECT_TRUE(d.permutations[1].IsIdentity());
  EXPECT_THAT(d.permutations[2].OneBasedImage(), ElementsAre(1, 2, 5, 4, 3));
  EXPECT_THAT(d.reverse_mapped.column(2).values,
              ElementsAre(3707, 826, -1008, 2419, -1317));
  EXPECT_THAT(d.residuals[0], ElementsAre(0, 0, -3, 0, 0));
  EXPECT_THAT(d.residuals[1], ElementsAre(0, 5, -1, 0, 0));
  EXPECT_THAT(d.residuals[2], ElementsAre(0, -4, 1256, 0, 309));
}

TEST(ReverseMapTest, CategoricalResidualsAreFlags) {
  std::istringstream xin("#ordered:g=a<b<c\ng,v\na,1\nb,2\nc,3\n");
  std::istringstream yin("#ordered:g=a<b<c\ng,v\nb,1\na,2\nc,3\n");
  Dataset x = *LoadDataset(xin, "x");
  Dataset y = *LoadDataset(yin, "y");
  Decomposition d = Decompose(x, y);
  EXPECT_THAT(d.residuals[0], ElementsAre(0, 0, 0));
  EXPECT_THAT(d.permutations[0].OneBasedImage(), ElementsAre(2, 1, 3));
  std::ostringstream out;
  WriteResiduals(d, out);
  EXPECT_EQ(out.str(), "g,v\nsame,0\nsame,0\nsame,0\n");
}

// Random tie-free X, random true permutations, rank-preserving noise; the
// decomposition has to give the true permutations back along with Z and E
// satisfying the structural invariants.
TEST(ReverseMapTest, RecoversPlantedPermutations) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int p = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<AttributeColumn> columns;
    std::vector<Permutation> truth;
    for (int j = 0; j < p; ++j) {
      columns.push_back({"a" + std::to_string(j),
                         testing::DistinctColumn(n, rng), {}});
      truth.push_back(*Permutation::FromImage(testing::RandomImage(n, rng)));
    }
    Dataset x = *Dataset::Create("x", columns);
    NoiseSpec noise{{std::uniform_real_distribution<double>(0, 30)(rng)},
                    rng()};
    absl::StatusOr<Dataset> y = ApplyPermutations(x, truth, noise);
    ASSERT_TRUE(y.ok()) << y.status();
    Decomposition d = Decompose(x, *y);
    ASSERT_EQ(d.permutations, truth);
    for (int j = 0; j < p; ++j) {
      std::vector<double> zs = d.reverse_mapped.column(j).values;
      std::vector<double> xs = x.column(j).values;
      std::sort(zs.begin(), zs.end());
      std::sort(xs.begin(), xs.end());
      EXPECT_EQ(zs, xs);
      EXPECT_EQ(RankAttribute(d.reverse_mapped.column(j),
                              RankDirection::kDescending).ranks,
                d.masked_ranks[j].ranks);
      for (int i = 0; i < n; ++i) {
        EXPECT_DOUBLE_EQ(d.reverse_mapped.column(j).values[i] +
                             d.residuals[j][i],
                         y->column(j).values[i]);
      }
    }
  }
}

TEST(ReverseMapTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<double> xv = testing::DistinctColumn(n, rng);
    std::vector<double> yv = testing::DistinctColumn(n, rng);
    Dataset x = *Dataset::Create("x", {{"a", xv, {}}});
    Dataset y = *Dataset::Create("y", {{"a", yv, {}}});
    Decomposition d = Decompose(x, y);
    std::vector<std::vector<int>> matches =
        testing::BruteForceMatchingPermutations(xv, yv);
    ASSERT_EQ(matches.size(), 1u);
    EXPECT_EQ(d.permutations[0].image(), matches[0]);
  }
}

TEST(ReverseMapTest, DirectionDoesNotChangeTieFreeResults) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    Dataset x = *Dataset::Create(
        "x", {{"a", testing::DistinctColumn(n, rng), {}},
              {"b", testing::DistinctColumn(n, rng), {}}});
    Dataset y = *Dataset::Create(
        "y", {{"a", testing::DistinctColumn(n, rng), {}},
              {"b", testing::DistinctColumn(n, rng), {}}});
    Decomposition desc = Decompose(x, y);
    Decomposition asc =
        Decompose(x, y, {.direction = RankDirection::kAscending});
    EXPECT_EQ(desc.permutations, asc.permutations);
    EXPECT_EQ(desc.reverse_mapped, asc.reverse_mapped);
  }
}

TEST(ReverseMapTest, ParallelMatchesSequential) {
  std::mt19937_64 rng(31);
  std::vector<AttributeColumn> xc, yc;
  for (int j = 0; j < 16; ++j) {
    xc.push_back({"a" + std::to_string(j), testing::DistinctColumn(200, rng), {}});
    yc.push_back({"a" + std::to_string(j), testing::DistinctColumn(200, rng), {}});
  }
  Dataset x = *Dataset::Create("x", xc);
  Dataset y = *Dataset::Create("y", yc);
  Decomposition seq = Decompose(x, y);
  Decomposition par = Decompose(x, y, {.num_threads = 4});
  EXPECT_EQ(seq.permutations, par.permutations);
  EXPECT_EQ(seq.reverse_mapped, par.reverse_mapped);
  EXPECT_EQ(seq.residuals, par.residuals);
}

}  // namespace
}  // namespace permaudit
