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
#include <numbers>

namespace permaudit {
namespace {

constexpr uint32_t kMultiplier0 = 0xD2511F53;
constexpr uint32_t kMultiplier1 = 0xCD9E8D57;
constexpr uint32_t kWeyl0 = 0x9E3779B9;
constexpr uint32_t kWeyl1 = 0xBB67AE85;

inline void MulHiLo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  const uint64_t product = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(product >> 32);
  lo = static_cast<uint32_t>(product);
}

}  // namespace

PhiloxCounter Philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    MulHiLo(kMultiplier0, ctr[0], hi0, lo0);
    MulHiLo(kMultiplier1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RandomStream::RandomStream(uint64_t seed, StreamDomain domain,
                           uint32_t substream, uint32_t row)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      domain_(static_cast<uint32_t>(domain)),
      substream_(substream),
      row_(row) {}

uint64_t RandomStream::NextU64() {
  if (buffered_ == 0) {
    const PhiloxCounter out =
        Philox4x32({block_, row_, substream_, domain_}, key_);
    ++block_;
    buffer_[0] = (static_cast<uint64_t>(out[0]) << 32) | out[1];
    buffer_[1] = (static_cast<uint64_t>(out[2]) << 32) | out[3];
    buffered_ = 2;
  }
  return buffer_[2 - buffered_--];
}

double RandomStream::NextUniform() {
  // 53 random bits centred in their bucket: never 0, never 1.
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::NextGaussian() {
  const double u1 = NextUniform();
  const double u2 = NextUniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t RandomStream::NextBelow(uint64_t bound) {
  // Rejection keeps the result exactly uniform.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return x % bound;
}

}  // namespace permaudit
