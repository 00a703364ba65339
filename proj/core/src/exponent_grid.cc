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

#include "permaudit/exponent_grid.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "permaudit/microdata.h"
#include "permaudit/power_mean.h"

namespace permaudit {
namespace {

absl::StatusOr<double> ParseDouble(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (text.empty() || ec != std::errc() ||
      ptr != text.data() + text.size() || !std::isfinite(value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", text, "' is not a finite number"));
  }
  return value;
}

// Removes representation noise from k * step sums (0.1 * 3 -> 0.3).
double Tidy(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

absl::Status CheckExponent(MeasureKind kind, double exponent) {
  if (std::isnan(exponent)) {
    return absl::InvalidArgumentError("exponent is NaN");
  }
  if (kind == MeasureKind::kRisk && exponent > 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "risk aversion exponent must be <= 1, got ", FormatExponent(exponent)));
  }
  if (kind == MeasureKind::kInfoLoss && exponent < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("information-loss aversion exponent must be >= 1, got ",
                     FormatExponent(exponent)));
  }
  return absl::OkStatus();
}

absl::StatusOr<ExponentGrid> ExponentGrid::Create(MeasureKind kind,
                                                  std::vector<double> values,
                                                  bool include_limit) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError(
          "grid values must be finite; use the limit flag for infinities");
    }
    if (absl::Status s = CheckExponent(kind, v); !s.ok()) return s;
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() && !include_limit) {
    return absl::InvalidArgumentError("exponent grid is empty");
  }
  return ExponentGrid(kind, std::move(values), include_limit);
}

ExponentGrid ExponentGrid::DefaultRisk() {
  return ExponentGrid(MeasureKind::kRisk, {-8, -4, -2, -1, -0.5, 0, 0.5, 1},
                      true);
}

ExponentGrid ExponentGrid::DefaultInfoLoss() {
  return ExponentGrid(MeasureKind::kInfoLoss, {1, 1.5, 2, 3, 4, 8}, true);
}

absl::StatusOr<ExponentGrid> ExponentGrid::Parse(MeasureKind kind,
                                                 absl::string_view text,
                                                 bool include_limit) {
  std::vector<double> values;
  for (absl::string_view item : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    item = absl::StripAsciiWhitespace(item);
    const std::string lowered = absl::AsciiStrToLower(item);
    if (lowered == "-inf" || lowered == "+inf" || lowered == "inf") {
      const bool lower = lowered == "-inf";
      if (lower != (kind == MeasureKind::kRisk)) {
        return absl::InvalidArgumentError(
            absl::StrCat("'", item, "' is not a legal limit for this measure"));
      }
      include_limit = true;
      continue;
    }
    std::vector<absl::string_view> parts = absl::StrSplit(item, ':');
    if (parts.size() == 1) {
      absl::StatusOr<double> v = ParseDouble(parts[0]);
      if (!v.ok()) return v.status();
      values.push_back(*v);
    } else if (parts.size() == 3) {
      absl::StatusOr<double> lo = ParseDouble(parts[0]);
      absl::StatusOr<double> hi = ParseDouble(parts[1]);
      absl::StatusOr<double> step = ParseDouble(parts[2]);
      if (!lo.ok()) return lo.status();
      if (!hi.ok()) return hi.status();
      if (!step.ok()) return step.status();
      if (!(*step > 0) || *hi < *lo) {
        return absl::InvalidArgumentError(absl::StrCat(
            "range '", item, "' needs min <= max and a positive step"));
      }
      const double count = std::floor((*hi - *lo) / *step + 1e-9);
      if (count > 100000) {
        return absl::InvalidArgumentError(
            absl::StrCat("range '", item, "' has too many points"));
      }
      for (int k = 0; k <= static_cast<int>(count); ++k) {
        values.push_back(Tidy(*lo + k * *step));
      }
    } else {
      return absl::InvalidArgumentError(absl::StrCat(
          "grid item '", item, "' is neither a number nor min:max:step"));
    }
  }
  return Create(kind, std::move(values), include_limit);
}

std::vector<double> ExponentGrid::Points() const {
  std::vector<double> points;
  if (include_lower_limit()) points.push_back(-kInfinity);
  points.insert(points.end(), values_.begin(), values_.end());
  if (include_upper_limit()) points.push_back(kInfinity);
  return points;
}

std::string FormatExponent(double exponent) {
  if (exponent == kInfinity) return "+inf";
  if (exponent == -kInfinity) return "-inf";
  return FormatNumber(exponent);
}

}  // namespace permaudit
