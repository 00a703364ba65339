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

// Permutations, their matrix view, and rank displacement vectors.

#ifndef PERMAUDIT_PERMUTATION_H_
#define PERMAUDIT_PERMUTATION_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "permaudit/microdata.h"

namespace permaudit {

// A bijection on {0..n-1}. `image()[i]` is the original row whose value
// lands at row i of the permuted column, so applying the permutation to a
// column x gives y[i] = x[image()[i]]. Text I/O uses 1-based images.
class Permutation {
 public:
  static Permutation Identity(int n);
  static absl::StatusOr<Permutation> FromImage(std::vector<int> image);
  static absl::StatusOr<Permutation> FromOneBasedImage(
      std::span<const int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  std::vector<int> OneBasedImage() const;

  Permutation Inverse() const;
  int FixedPoints() const;
  bool IsIdentity() const { return FixedPoints() == size(); }

  // y[i] = values[image()[i]]. `values` must have size() elements.
  std::vector<double> Apply(std::span<const double> values) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

// Dense 0/1 view with entry (i, image[i]) = 1.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(const Permutation& permutation);

  int size() const { return n_; }
  int at(int row, int col) const { return entries_[row * n_ + col]; }
  int Trace() const;
  // One row per line, entries separated by single spaces.
  std::string ToString() const;

 private:
  int n_;
  std::vector<uint8_t> entries_;
};

PermutationMatrix ToMatrix(const Permutation& permutation);

// Signed per-record rank displacement. raw[j] counts how far the 1 in
// column j of the permutation matrix moved from the diagonal: positive when
// it moved down, negative when it moved up.
struct DisplacementVector {
  std::string attribute;
  std::vector<int> raw;

  int size() const { return static_cast<int>(raw.size()); }
  int ZeroCount() const;
};

// raw[j] = inverse(j) - j.
DisplacementVector Displacement(const Permutation& permutation,
                                std::string attribute = {});

// Finds, for every row i of the masked column, the original row whose rank
// equals the masked rank at i.
absl::StatusOr<Permutation> ExtractPermutation(const Ranking& original,
                                               const Ranking& masked);

// |raw[j]|, with zero displacements replaced by `epsilon` so that power means
// with non-positive exponents stay defined.
absl::StatusOr<std::vector<double>> Epsilonize(const DisplacementVector& d,
                                               double epsilon);

struct NamedPermutation {
  std::string attribute;
  Permutation permutation;
};

// One line per attribute: "name: i1 i2 ... in" (1-based image).
absl::StatusOr<std::vector<NamedPermutation>> ReadPermutations(
    std::istream& in);
absl::StatusOr<std::vector<NamedPermutation>> ReadPermutationsFile(
    const std::string& path);
void WritePermutations(std::span<const NamedPermutation> permutations,
                       std::ostream& out);

}  // namespace permaudit

#endif  // PERMAUDIT_PERMUTATION_H_
