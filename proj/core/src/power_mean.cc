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

#include "permaudit/power_mean.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace permaudit {
namespace {

// Assumes validated input. Terms are scaled by the maximum (a > 0) or the
// minimum (a < 0) so that every scaled term lies in [0, 1] and the sum can
// neither overflow nor lose the dominant term to underflow.
double Evaluate(std::span<const double> values, double exponent) {
  const auto [min_it, max_it] =
      std::minmax_element(values.begin(), values.end());
  const double lo = *min_it;
  const double hi = *max_it;
  if (exponent == -kInfinity) return lo;
  if (exponent == kInfinity) return hi;
  if (lo == hi) return lo;
  const double n = static_cast<double>(values.size());

  double result;
  if (exponent == 1) {
    double sum = 0;
    for (double v : values) sum += v;
    result = sum / n;
  } else if (exponent == 0) {
    double log_sum = 0;
    for (double v : values) log_sum += std::log(v);
    result = std::exp(log_sum / n);
  } else {
    const double reference = exponent > 0 ? hi : lo;
    double sum = 0;
    for (double v : values) {
      if (v > 0) sum += std::pow(v / reference, exponent);
    }
    result = reference * std::pow(sum / n, 1.0 / exponent);
  }
  return std::clamp(result, lo, hi);
}

absl::Status CheckExponent(double exponent) {
  if (std::isnan(exponent)) {
    return absl::InvalidArgumentError("power-mean exponent is NaN");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> PowerMean(std::span<const double> values,
                                 double exponent) {
  if (values.empty()) {
    return absl::InvalidArgumentError("power mean of an empty sequence");
  }
  if (absl::Status s = CheckExponent(exponent); !s.ok()) return s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0) || !std::isfinite(values[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("power mean requires positive finite values; element ",
                       i + 1, " is ", values[i]));
    }
  }
  return Evaluate(values, exponent);
}

absl::StatusOr<double> NonNegativePowerMean(std::span<const double> values,
                                            double exponent) {
  if (values.empty()) {
    return absl::InvalidArgumentError("power mean of an empty sequence");
  }
  if (absl::Status s = CheckExponent(exponent); !s.ok()) return s;
  if (!(exponent > 0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "nonnegative power mean requires a positive exponent, got ",
        exponent));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0) || !std::isfinite(values[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("power mean requires nonnegative finite values; "
                       "element ",
                       i + 1, " is ", values[i]));
    }
  }
  return Evaluate(values, exponent);
}

}  // namespace permaudit
