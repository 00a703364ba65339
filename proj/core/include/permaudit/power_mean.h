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

// Power (generalized) means.
//
//   M_a(v) = ((1/n) * sum v_i^a)^(1/a)   a != 0
//   M_0(v) = (prod v_i)^(1/n)
//   M_-inf(v) = min v_i,  M_+inf(v) = max v_i
//
// M_a is nondecreasing in a, homogeneous of degree 1, and lies between the
// minimum and the maximum of v.

#ifndef PERMAUDIT_POWER_MEAN_H_
#define PERMAUDIT_POWER_MEAN_H_

#include <limits>
#include <span>

#include "absl/status/statusor.h"

namespace permaudit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Requires a nonempty sequence of strictly positive finite values. Any
// exponent, including +/-infinity, is accepted. The result is clamped into
// [min, max] so the bounds hold exactly despite rounding.
absl::StatusOr<double> PowerMean(std::span<const double> values,
                                 double exponent);

// Variant for nonnegative values, restricted to positive exponents (where
// zeros are harmless). An all-zero sequence has mean 0.
absl::StatusOr<double> NonNegativePowerMean(std::span<const double> values,
                                            double exponent);

}  // namespace permaudit

#endif  // PERMAUDIT_POWER_MEAN_H_
