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

#include "permaudit/running_example.h"

#include <string>
#include <utility>

namespace permaudit::running_example {
namespace {

Dataset Make(const char* name, std::vector<double> v1, std::vector<double> v2,
             std::vector<double> v3) {
  std::vector<AttributeColumn> columns = {
      {"V1", std::move(v1), {}},
      {"V2", std::move(v2), {}},
      {"V3", std::move(v3), {}},
  };
  return *Dataset::Create(name, std::move(columns));
}

}  // namespace

Dataset Original() {
  return Make("running-example original", {13, 20, 2, 15, 29},
              {135, 52, 123, 165, 160}, {3707, 826, -1317, 2419, -1008});
}

Dataset Masked() {
  return Make("running-example masked", {8, 20, -1, 18, 29},
              {160, 57, 122, 135, 164}, {3248, 822, 248, 597, -1927});
}

Dataset LocallyMasked() {
  return Make("running-example locally masked", {13, 20, -1, 15, 29},
              {135, 57, 122, 165, 160}, {3707, 822, 248, 2419, -1008});
}

std::vector<Permutation> Permutations() {
  const std::vector<int> p2 = {5, 2, 3, 1, 4};
  const std::vector<int> p3 = {1, 4, 5, 2, 3};
  return {Permutation::Identity(5), *Permutation::FromOneBasedImage(p2),
          *Permutation::FromOneBasedImage(p3)};
}

bool IsBundledPair(const Dataset& original, const Dataset& masked) {
  return original == Original() && masked == Masked();
}

}  // namespace permaudit::running_example
