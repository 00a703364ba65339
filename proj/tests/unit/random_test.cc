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

#include "permaudit/random.h"

#include <cmath>
#include <set>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace permaudit {
namespace {

using ::testing::ElementsAre;

// Known-answer vectors published with the Random123 reference
// implementation.
TEST(PhiloxTest, KnownAnswers) {
  EXPECT_THAT(Philox4x32({0, 0, 0, 0}, {0, 0}),
              ElementsAre(0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8));
  EXPECT_THAT(Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                         {0xffffffff, 0xffffffff}),
              ElementsAre(0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd));
  EXPECT_THAT(Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                         {0xa4093822, 0x299f31d0}),
              ElementsAre(0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1));
}

TEST(RandomStreamTest, Deterministic) {
  RandomStream a(42, StreamDomain::kNoise, 3, 7);
  RandomStream b(42, StreamDomain::kNoise, 3, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RandomStreamTest, StreamsDiffer) {
  std::set<uint64_t> firsts;
  for (uint64_t seed : {1, 2}) {
    for (StreamDomain domain :
         {StreamDomain::kNoise, StreamDomain::kBlockPermutation}) {
      for (uint32_t sub : {0u, 1u}) {
        for (uint32_t row : {0u, 1u}) {
          firsts.insert(RandomStream(seed, domain, sub, row).NextU64());
        }
      }
    }
  }
  EXPECT_EQ(firsts.size(), 16u);
}

TEST(RandomStreamTest, HighSeedBitsMatter) {
  EXPECT_NE(RandomStream(1, StreamDomain::kNoise, 0).NextU64(),
            RandomStream(1 | (uint64_t{1} << 40), StreamDomain::kNoise, 0)
                .NextU64());
}

TEST(RandomStreamTest, UniformIsOpenAndCentered) {
  RandomStream s(7, StreamDomain::kNoise, 0);
  double sum = 0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = s.NextUniform();
    ASSERT_GT(u, 0);
    ASSERT_LT(u, 1);
    sum += u;
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 0.01);
}

TEST(RandomStreamTest, GaussianMoments) {
  RandomStream s(8, StreamDomain::kNoise, 0);
  double sum = 0, sum_sq = 0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double g = s.NextGaussian();
    ASSERT_TRUE(std::isfinite(g));
    sum += g;
    sum_sq += g * g;
  }
  EXPECT_NEAR(sum / kDraws, 0, 0.01);
  EXPECT_NEAR(sum_sq / kDraws, 1, 0.02);
}

TEST(RandomStreamTest, NextBelowCoversRangeEvenly) {
  RandomStream s(9, StreamDomain::kBlockPermutation, 0);
  std::vector<int> counts(7);
  constexpr int kDraws = 70000;
  for (int i = 0; i < kDraws; ++i) {
    const uint64_t k = s.NextBelow(7);
    ASSERT_LT(k, 7u);
    ++counts[k];
  }
  for (int c : counts) EXPECT_NEAR(c, kDraws / 7, 400);
  EXPECT_EQ(s.NextBelow(1), 0u);
}

}  // namespace
}  // namespace permaudit
