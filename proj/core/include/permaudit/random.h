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

// Counter-based random numbers (Philox4x32-10).
//
// Every draw is a pure function of (seed, domain, substream, row, index), so
// cells can be generated in any order or on any thread with identical
// results. The generator is versioned; changing how draws are derived must
// bump kGeneratorVersion because it changes every seeded output.

#ifndef PERMAUDIT_RANDOM_H_
#define PERMAUDIT_RANDOM_H_

#include <array>
#include <cstdint>

namespace permaudit {

inline constexpr char kGeneratorName[] = "philox4x32-10";
inline constexpr int kGeneratorVersion = 1;

using PhiloxCounter = std::array<uint32_t, 4>;
using PhiloxKey = std::array<uint32_t, 2>;

// Ten rounds of Philox4x32 on one counter block.
PhiloxCounter Philox4x32(PhiloxCounter counter, PhiloxKey key);

// Separates unrelated uses of the same seed.
enum class StreamDomain : uint32_t {
  kNoise = 1,
  kBlockPermutation = 2,
  kBoundedPermutation = 3,
};

class RandomStream {
 public:
  RandomStream(uint64_t seed, StreamDomain domain, uint32_t substream,
               uint32_t row = 0);

  uint64_t NextU64();
  // Uniform on the open interval (0, 1).
  double NextUniform();
  // Standard normal via Box-Muller.
  double NextGaussian();
  // Uniform on [0, bound); bound must be positive.
  uint64_t NextBelow(uint64_t bound);

 private:
  PhiloxKey key_;
  uint32_t domain_;
  uint32_t substream_;
  uint32_t row_;
  uint32_t block_ = 0;
  std::array<uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace permaudit

#endif  // PERMAUDIT_RANDOM_H_
