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

// Independent reference computations for tests. Nothing here calls into the
// code paths it is used to check.

#ifndef PERMAUDIT_TESTS_TESTING_ORACLES_H_
#define PERMAUDIT_TESTS_TESTING_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace permaudit::testing {

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

// Power mean evaluated directly from its definition in 50-digit decimal
// arithmetic. Finite exponents only.
inline double HighPrecisionPowerMean(const std::vector<double>& values,
                                     double exponent) {
  const HighPrecision n(values.size());
  if (exponent == 0) {
    HighPrecision log_sum = 0;
    for (double v : values) log_sum += boost::multiprecision::log(HighPrecision(v));
    return static_cast<double>(boost::multiprecision::exp(log_sum / n));
  }
  const HighPrecision a(exponent);
  HighPrecision sum = 0;
  for (double v : values) sum += boost::multiprecision::pow(HighPrecision(v), a);
  return static_cast<double>(
      boost::multiprecision::pow(sum / n, HighPrecision(1) / a));
}

// Rank of each value under "largest first", computed by counting how many
// values beat it. Only valid for tie-free input.
inline std::vector<int> CountingRanks(const std::vector<double>& values) {
  std::vector<int> ranks(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    int larger = 0;
    for (double other : values) larger += other > values[i];
    ranks[i] = larger + 1;
  }
  return ranks;
}

// Enumerates all n! permutation matrices (as 0-based images: row i of P x
// takes x[image[i]]) and returns every one for which rank(P x) == rank(y).
inline std::vector<std::vector<int>> BruteForceMatchingPermutations(
    const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<int> target = CountingRanks(y);
  std::vector<int> image(x.size());
  std::iota(image.begin(), image.end(), 0);
  std::vector<std::vector<int>> matches;
  do {
    std::vector<double> px(x.size());
    for (size_t i = 0; i < x.size(); ++i) px[i] = x[image[i]];
    if (CountingRanks(px) == target) matches.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return matches;
}

// Spearman's rho as the Pearson correlation of two rank vectors.
inline double PearsonOfRanks(const std::vector<int>& a,
                             const std::vector<int>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Tie-free random column: distinct integers scaled and shuffled.
inline std::vector<double> DistinctColumn(int n, std::mt19937_64& rng) {
  std::vector<double> values(n);
  std::uniform_int_distribution<int> step(1, 50);
  double v = std::uniform_int_distribution<int>(-1000, 1000)(rng);
  for (double& x : values) {
    v += step(rng);
    x = v;
  }
  std::shuffle(values.begin(), values.end(), rng);
  return values;
}

inline std::vector<int> RandomImage(int n, std::mt19937_64& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return image;
}

}  // namespace permaudit::testing

#endif  // PERMAUDIT_TESTS_TESTING_ORACLES_H_
