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

// Finite grids of aversion exponents with optional analytic limit endpoints.
//
// Risk measures accept exponents <= 1 and may add -inf; information-loss
// measures accept exponents >= 1 and may add +inf.

#ifndef PERMAUDIT_EXPONENT_GRID_H_
#define PERMAUDIT_EXPONENT_GRID_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace permaudit {

enum class MeasureKind { kRisk, kInfoLoss };

class ExponentGrid {
 public:
  // Sorts and deduplicates `values`. Fails when a value is non-finite or
  // outside the legal range for `kind`. `include_limit` adds -inf for risk
  // grids and +inf for info-loss grids.
  static absl::StatusOr<ExponentGrid> Create(MeasureKind kind,
                                             std::vector<double> values,
                                             bool include_limit);

  // {-8, -4, -2, -1, -0.5, 0, 0.5, 1} plus -inf.
  static ExponentGrid DefaultRisk();
  // {1, 1.5, 2, 3, 4, 8} plus +inf.
  static ExponentGrid DefaultInfoLoss();

  // Comma-separated items; each item is a number, a "min:max:step" range,
  // or one of "-inf"/"+inf"/"inf" (which force the limit endpoint on).
  static absl::StatusOr<ExponentGrid> Parse(MeasureKind kind,
                                            absl::string_view text,
                                            bool include_limit);

  MeasureKind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }
  bool include_lower_limit() const {
    return include_limit_ && kind_ == MeasureKind::kRisk;
  }
  bool include_upper_limit() const {
    return include_limit_ && kind_ == MeasureKind::kInfoLoss;
  }

  // All grid points in ascending order, limits included.
  std::vector<double> Points() const;

 private:
  ExponentGrid(MeasureKind kind, std::vector<double> values,
               bool include_limit)
      : kind_(kind), values_(std::move(values)), include_limit_(include_limit) {}

  MeasureKind kind_;
  std::vector<double> values_;
  bool include_limit_;
};

// "-inf", "+inf", or the shortest round-trip decimal.
std::string FormatExponent(double exponent);

// Validates a single exponent for `kind`; infinities are legal only on the
// measure's own side.
absl::Status CheckExponent(MeasureKind kind, double exponent);

}  // namespace permaudit

#endif  // PERMAUDIT_EXPONENT_GRID_H_
