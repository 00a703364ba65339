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

#include "permaudit/anonymizers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "permaudit/parallel.h"
#include "permaudit/random.h"
#include "permaudit/status_macros.h"

namespace permaudit {
namespace {

// Keeps noisy values strictly inside the half-gap to each neighbour.
constexpr double kGapShare = 0.5 * (1.0 - 1.0 / 1024);
constexpr double kUnbounded = std::numeric_limits<double>::infinity();

absl::StatusOr<std::vector<double>> ResolveSigma(const Dataset& x,
                                                 const NoiseSpec& spec) {
  const int p = x.num_attributes();
  std::vector<double> sigma;
  if (spec.sigma.size() == 1) {
    sigma.assign(p, spec.sigma.front());
  } else if (static_cast<int>(spec.sigma.size()) == p) {
    sigma = spec.sigma;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("noise spec has ", spec.sigma.size(),
                     " standard deviations for ", p, " attributes"));
  }
  for (int j = 0; j < p; ++j) {
    if (!(sigma[j] >= 0) || !std::isfinite(sigma[j])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "standard deviation for '", x.column(j).name,
          "' must be finite and >= 0"));
    }
    if (sigma[j] > 0 && !x.column(j).is_numeric()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "cannot add noise to non-numeric column '", x.column(j).name, "'"));
    }
  }
  return sigma;
}

double CellNoise(uint64_t seed, int column, int row, double sigma) {
  RandomStream stream(seed, StreamDomain::kNoise, static_cast<uint32_t>(column),
                      static_cast<uint32_t>(row));
  return sigma * stream.NextGaussian();
}

absl::StatusOr<Dataset> NoiseRows(const Dataset& x,
                                  const std::vector<bool>& touched,
                                  const NoiseSpec& spec,
                                  const ExecutionOptions& exec) {
  PERMAUDIT_ASSIGN_OR_RETURN(std::vector<double> sigma, ResolveSigma(x, spec));
  const int n = x.num_records();
  std::vector<std::vector<double>> columns(x.num_attributes());
  ParallelFor(x.num_attributes(), exec.num_threads, [&](int j) {
    std::vector<double> values = x.column(j).values;
    if (sigma[j] > 0) {
      for (int i = 0; i < n; ++i) {
        if (touched[i]) values[i] += CellNoise(spec.seed, j, i, sigma[j]);
      }
    }
    columns[j] = std::move(values);
  });
  Dataset y = x;
  for (int j = 0; j < x.num_attributes(); ++j) {
    y = y.WithColumnValues(j, std::move(columns[j]));
  }
  return y;
}

std::vector<int> RankVector(const std::vector<double>& values) {
  AttributeColumn column{.name = "_", .values = values, .levels = {}};
  return RankAttribute(column, RankDirection::kDescending).ranks;
}

// Adds rank-preserving noise to one already-permuted column.
absl::StatusOr<std::vector<double>> RankPreservingNoise(
    const std::vector<double>& base, uint64_t seed, int column, double sigma) {
  const int n = static_cast<int>(base.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&base](int a, int b) { return base[a] < base[b]; });

  std::vector<double> out = base;
  for (int k = 0; k < n; ++k) {
    const int row = order[k];
    const double v = base[row];
    const double below = k > 0 ? v - base[order[k - 1]] : kUnbounded;
    const double above = k + 1 < n ? base[order[k + 1]] - v : kUnbounded;
    if (below == 0 || above == 0) continue;
    double e = CellNoise(seed, column, row, sigma);
    e = std::clamp(e, -kGapShare * below, kGapShare * above);
    out[row] = v + e;
  }
  if (RankVector(out) != RankVector(base)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "rank-preserving noise re-ranked column ", column + 1,
        " after rounding; values are too close for the requested noise"));
  }
  return out;
}

}  // namespace

absl::StatusOr<Dataset> AddNoise(const Dataset& x, const NoiseSpec& spec,
                                 const ExecutionOptions& exec) {
  return NoiseRows(x, std::vector<bool>(x.num_records(), true), spec, exec);
}

absl::StatusOr<Dataset> LocalNoise(const Dataset& x, std::span<const int> rows,
                                   const NoiseSpec& spec,
                                   const ExecutionOptions& exec) {
  std::vector<bool> touched(x.num_records(), false);
  for (int row : rows) {
    if (row < 0 || row >= x.num_records()) {
      return absl::OutOfRangeError(absl::StrCat(
          "row ", row + 1, " is outside 1..", x.num_records()));
    }
    touched[row] = true;
  }
  return NoiseRows(x, touched, spec, exec);
}

absl::StatusOr<Dataset> BlockPermute(const Dataset& x, const BlockSpec& spec) {
  const int p = x.num_attributes();
  std::vector<int> block_of(p, -1);
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    if (spec.blocks[b].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("block ", b + 1, " is empty"));
    }
    for (const std::string& name : spec.blocks[b]) {
      std::optional<int> j = x.FindColumn(name);
      if (!j) {
        return absl::InvalidArgumentError(
            absl::StrCat("block ", b + 1, " names unknown attribute '", name,
                         "'"));
      }
      if (block_of[*j] != -1) {
        return absl::InvalidArgumentError(absl::StrCat(
            "attribute '", name, "' appears in more than one block"));
      }
      block_of[*j] = static_cast<int>(b);
    }
  }
  for (int j = 0; j < p; ++j) {
    if (block_of[j] == -1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "attribute '", x.column(j).name, "' is not in any block"));
    }
  }

  const int n = x.num_records();
  std::vector<Permutation> block_perms;
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    RandomStream stream(spec.seed, StreamDomain::kBlockPermutation,
                        static_cast<uint32_t>(b));
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const int k = static_cast<int>(stream.NextBelow(i + 1));
      std::swap(image[i], image[k]);
    }
    PERMAUDIT_ASSIGN_OR_RETURN(Permutation perm,
                               Permutation::FromImage(std::move(image)));
    block_perms.push_back(std::move(perm));
  }

  Dataset y = x;
  for (int j = 0; j < p; ++j) {
    y = y.WithColumnValues(j, block_perms[block_of[j]].Apply(x.column(j).values));
  }
  return y;
}

absl::StatusOr<Dataset> ApplyPermutations(const Dataset& x,
                                          std::span<const Permutation> perms,
                                          const std::optional<NoiseSpec>& noise,
                                          const ExecutionOptions& exec) {
  const int p = x.num_attributes();
  if (static_cast<int>(perms.size()) != p) {
    return absl::InvalidArgumentError(absl::StrCat(
        "got ", perms.size(), " permutations for ", p, " attributes"));
  }
  for (int j = 0; j < p; ++j) {
    if (perms[j].size() != x.num_records()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "permutation for '", x.column(j).name, "' has length ",
          perms[j].size(), ", expected ", x.num_records()));
    }
  }
  std::vector<double> sigma(p, 0.0);
  if (noise.has_value()) {
    PERMAUDIT_ASSIGN_OR_RETURN(sigma, ResolveSigma(x, *noise));
  }
  const uint64_t seed = noise.has_value() ? noise->seed : 0;

  std::vector<absl::StatusOr<std::vector<double>>> columns(
      p, absl::UnknownError("not computed"));
  ParallelFor(p, exec.num_threads, [&](int j) {
    std::vector<double> permuted = perms[j].Apply(x.column(j).values);
    if (sigma[j] > 0) {
      columns[j] = RankPreservingNoise(permuted, seed, j, sigma[j]);
    } else {
      columns[j] = std::move(permuted);
    }
  });

  Dataset y = x;
  for (int j = 0; j < p; ++j) {
    if (!columns[j].ok()) return columns[j].status();
    y = y.WithColumnValues(j, *std::move(columns[j]));
  }
  return y;
}

absl::StatusOr<Permutation> SampleBoundedPermutation(int n,
                                                     int max_displacement,
                                                     uint64_t seed) {
  if (n < 1) {
    return absl::InvalidArgumentError("permutation length must be positive");
  }
  if (max_displacement < 0 || max_displacement > n - 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "max displacement must be in 0..", n - 1, ", got ", max_displacement));
  }
  RandomStream stream(seed, StreamDomain::kBoundedPermutation, 0);
  std::vector<bool> used(n, false);
  std::vector<int> image(n);
  std::vector<int> window;
  for (int i = 0; i < n; ++i) {
    const int forced = i - max_displacement;
    if (forced >= 0 && !used[forced]) {
      image[i] = forced;
    } else {
      window.clear();
      const int hi = std::min(n - 1, i + max_displacement);
      for (int j = std::max(0, forced); j <= hi; ++j) {
        if (!used[j]) window.push_back(j);
      }
      image[i] = window[stream.NextBelow(window.size())];
    }
    used[image[i]] = true;
  }
  return Permutation::FromImage(std::move(image));
}

absl::StatusOr<Dataset> BoundedPermute(const Dataset& x, int max_displacement,
                                       uint64_t seed) {
  std::vector<Permutation> perms;
  for (int j = 0; j < x.num_attributes(); ++j) {
    // Distinct per-attribute seeds derived through the counter generator.
    RandomStream derive(seed, StreamDomain::kBoundedPermutation,
                        static_cast<uint32_t>(j + 1));
    PERMAUDIT_ASSIGN_OR_RETURN(
        Permutation perm,
        SampleBoundedPermutation(x.num_records(), max_displacement,
                                 derive.NextU64()));
    perms.push_back(std::move(perm));
  }
  return ApplyPermutations(x, perms);
}

}  // namespace permaudit
