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

// A bundled five-record, three-attribute example used by the demo command
// and the golden tests. The original attributes were drawn from
// N(10, 10^2), N(100, 40^2) and N(1000, 2000^2); the masked version adds
// N(0, 5^2), N(0, 20^2) and N(0, 1000^2) noise.

#ifndef PERMAUDIT_RUNNING_EXAMPLE_H_
#define PERMAUDIT_RUNNING_EXAMPLE_H_

#include <vector>

#include "permaudit/microdata.h"
#include "permaudit/permutation.h"

namespace permaudit::running_example {

// Attribute names are "V1", "V2", "V3".
Dataset Original();
// Globally masked: every record perturbed.
Dataset Masked();
// Locally masked: only records 2 and 3 perturbed.
Dataset LocallyMasked();

// The permutations that relate Original() and Masked(), one per attribute.
std::vector<Permutation> Permutations();

// True when `original`/`masked` hold exactly the bundled global pair.
bool IsBundledPair(const Dataset& original, const Dataset& masked);

}  // namespace permaudit::running_example

#endif  // PERMAUDIT_RUNNING_EXAMPLE_H_
