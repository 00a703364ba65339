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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace permaudit {

Permutation Permutation::Identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

absl::StatusOr<Permutation> Permutation::FromImage(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int target = image[i];
    if (target < 0 || target >= n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "permutation entry ", target + 1, " at position ", i + 1,
          " is outside 1..", n));
    }
    if (seen[target]) {
      return absl::InvalidArgumentError(
          absl::StrCat("permutation repeats ", target + 1));
    }
    seen[target] = true;
  }
  return Permutation(std::move(image));
}

absl::StatusOr<Permutation> Permutation::FromOneBasedImage(
    std::span<const int> image) {
  std::vector<int> zero_based(image.begin(), image.end());
  for (int& v : zero_based) --v;
  return FromImage(std::move(zero_based));
}

std::vector<int> Permutation::OneBasedImage() const {
  std::vector<int> out(image_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::Inverse() const {
  std::vector<int> inverse(image_.size());
  for (int i = 0; i < size(); ++i) inverse[image_[i]] = i;
  return Permutation(std::move(inverse));
}

int Permutation::FixedPoints() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += image_[i] == i;
  return count;
}

std::vector<double> Permutation::Apply(std::span<const double> values) const {
  std::vector<double> out(image_.size());
  for (int i = 0; i < size(); ++i) out[i] = values[image_[i]];
  return out;
}

PermutationMatrix::PermutationMatrix(const Permutation& permutation)
    : n_(permutation.size()),
      entries_(static_cast<size_t>(n_) * n_, 0) {
  for (int i = 0; i < n_; ++i) entries_[i * n_ + permutation[i]] = 1;
}

int PermutationMatrix::Trace() const {
  int trace = 0;
  for (int i = 0; i < n_; ++i) trace += at(i, i);
  return trace;
}

std::string PermutationMatrix::ToString() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ' ';
      out += at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

PermutationMatrix ToMatrix(const Permutation& permutation) {
  return PermutationMatrix(permutation);
}

int DisplacementVector::ZeroCount() const {
  int count = 0;
  for (int r : raw) count += r == 0;
  return count;
}

DisplacementVector Displacement(const Permutation& permutation,
                                std::string attribute) {
  const Permutation inverse = permutation.Inverse();
  DisplacementVector d;
  d.attribute = std::move(attribute);
  d.raw.resize(permutation.size());
  for (int j = 0; j < permutation.size(); ++j) d.raw[j] = inverse[j] - j;
  return d;
}

absl::StatusOr<Permutation> ExtractPermutation(const Ranking& original,
                                               const Ranking& masked) {
  if (original.direction != masked.direction) {
    return absl::InvalidArgumentError(
        absl::StrCat("rank direction mismatch for '", original.attribute,
                     "'"));
  }
  if (original.size() != masked.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ranking length mismatch: ", original.size(), " vs ", masked.size()));
  }
  const int n = original.size();
  // row_of_rank[k] = original row holding rank k + 1.
  std::vector<int> row_of_rank(n, -1);
  for (int j = 0; j < n; ++j) {
    const int rank = original.ranks[j];
    if (rank < 1 || rank > n || row_of_rank[rank - 1] != -1) {
      return absl::InvalidArgumentError("original ranking is not a bijection");
    }
    row_of_rank[rank - 1] = j;
  }
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) {
    const int rank = masked.ranks[i];
    if (rank < 1 || rank > n) {
      return absl::InvalidArgumentError("masked ranking is out of range");
    }
    image[i] = row_of_rank[rank - 1];
  }
  return Permutation::FromImage(std::move(image));
}

absl::StatusOr<std::vector<double>> Epsilonize(const DisplacementVector& d,
                                               double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be a positive finite value, got ", epsilon));
  }
  std::vector<double> out(d.raw.size());
  for (size_t j = 0; j < d.raw.size(); ++j) {
    out[j] = d.raw[j] == 0 ? epsilon : std::abs(d.raw[j]);
  }
  return out;
}

absl::StatusOr<std::vector<NamedPermutation>> ReadPermutations(
    std::istream& in) {
  std::vector<NamedPermutation> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    absl::string_view view = absl::StripAsciiWhitespace(line);
    if (view.empty() || view.front() == '#') continue;
    const size_t colon = view.rfind(':');
    if (colon == absl::string_view::npos) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": expected 'name: i1 i2 ... in'"));
    }
    std::string name(absl::StripAsciiWhitespace(view.substr(0, colon)));
    if (name.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": missing attribute name"));
    }
    std::vector<int> image;
    for (absl::string_view token :
         absl::StrSplit(view.substr(colon + 1), ' ', absl::SkipWhitespace())) {
      token = absl::StripAsciiWhitespace(token);
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_number, ": '", token, "' is not an integer"));
      }
      image.push_back(value);
    }
    absl::StatusOr<Permutation> permutation =
        Permutation::FromOneBasedImage(image);
    if (!permutation.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, " ('", name,
          "'): ", permutation.status().message()));
    }
    out.push_back({std::move(name), *std::move(permutation)});
  }
  return out;
}

absl::StatusOr<std::vector<NamedPermutation>> ReadPermutationsFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  return ReadPermutations(in);
}

void WritePermutations(std::span<const NamedPermutation> permutations,
                       std::ostream& out) {
  for (const NamedPermutation& p : permutations) {
    out << p.attribute << ": "
        << absl::StrJoin(p.permutation.OneBasedImage(), " ") << "\n";
  }
}

}  // namespace permaudit
