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

#include "permaudit/risk.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "permaudit/power_mean.h"
#include "permaudit/status_macros.h"

namespace permaudit {

double TraceRatio(const Permutation& permutation) {
  if (permutation.size() == 0) return 0;
  return 1.0 - static_cast<double>(permutation.FixedPoints()) /
                   permutation.size();
}

absl::StatusOr<double> AttributeRisk(const DisplacementVector& d, double alpha,
                                     const RiskOptions& options) {
  PERMAUDIT_RETURN_IF_ERROR(CheckExponent(MeasureKind::kRisk, alpha));
  if (options.normalize && d.size() < 2) {
    return absl::InvalidArgumentError("normalization requires n >= 2");
  }
  PERMAUDIT_ASSIGN_OR_RETURN(std::vector<double> magnitudes,
                             Epsilonize(d, options.epsilon));
  PERMAUDIT_ASSIGN_OR_RETURN(double value, PowerMean(magnitudes, alpha));
  if (options.normalize) value /= d.size() - 1;
  return value;
}

absl::StatusOr<double> CombinedRisk(const Permutation& permutation,
                                    const DisplacementVector& d,
                                    double epsilon) {
  if (permutation.size() != d.size()) {
    return absl::InvalidArgumentError(
        "permutation and displacement vector differ in length");
  }
  PERMAUDIT_ASSIGN_OR_RETURN(double mean,
                             AttributeRisk(d, 1.0, {.epsilon = epsilon}));
  return TraceRatio(permutation) * mean;
}

namespace {

// Outer power mean over per-attribute risks. A zero risk (possible only in
// the epsilon-free limit) pins the mean to 0 when beta <= 0.
absl::StatusOr<double> OuterRisk(const std::vector<double>& per_attribute,
                                 double beta) {
  bool any_zero = false;
  for (double v : per_attribute) any_zero |= v == 0;
  if (any_zero) {
    if (beta <= 0) return 0.0;
    return NonNegativePowerMean(per_attribute, beta);
  }
  return PowerMean(per_attribute, beta);
}

}  // namespace

absl::StatusOr<double> DatasetRisk(std::span<const DisplacementVector> ds,
                                   double alpha, double beta,
                                   const RiskOptions& options) {
  if (ds.empty()) {
    return absl::InvalidArgumentError("dataset risk needs at least one attribute");
  }
  PERMAUDIT_RETURN_IF_ERROR(CheckExponent(MeasureKind::kRisk, beta));
  std::vector<double> per_attribute;
  per_attribute.reserve(ds.size());
  for (const DisplacementVector& d : ds) {
    PERMAUDIT_ASSIGN_OR_RETURN(double value, AttributeRisk(d, alpha, options));
    per_attribute.push_back(value);
  }
  return OuterRisk(per_attribute, beta);
}

absl::StatusOr<std::vector<CurvePoint>> RiskCurve(const DisplacementVector& d,
                                                  const ExponentGrid& grid,
                                                  const RiskOptions& options) {
  if (grid.kind() != MeasureKind::kRisk) {
    return absl::InvalidArgumentError("risk curve needs a risk grid");
  }
  std::vector<CurvePoint> curve;
  for (double alpha : grid.Points()) {
    PERMAUDIT_ASSIGN_OR_RETURN(double value, AttributeRisk(d, alpha, options));
    curve.push_back({alpha, value});
  }
  return curve;
}

namespace {

// For alpha > 0 the power mean is defined with zero entries, so the
// comparison uses the epsilon -> 0 limit. Otherwise a stand-in epsilon of
// 1e-8 would make two curves that agree at alpha = 1 differ by a few 1e-9
// purely through their zero counts.
absl::StatusOr<double> DominanceValue(const DisplacementVector& d,
                                      double alpha, double epsilon) {
  if (alpha > 0) {
    if (!(epsilon > 0)) {
      return absl::InvalidArgumentError("epsilon must be positive");
    }
    std::vector<double> magnitudes(d.raw.size());
    for (size_t i = 0; i < d.raw.size(); ++i) {
      magnitudes[i] = std::abs(d.raw[i]);
    }
    return NonNegativePowerMean(magnitudes, alpha);
  }
  return AttributeRisk(d, alpha, {.epsilon = epsilon});
}

}  // namespace

absl::StatusOr<DominanceVerdict> RiskDominance(const DisplacementVector& a,
                                               const DisplacementVector& b,
                                               const ExponentGrid& grid,
                                               double epsilon,
                                               double tolerance) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record counts differ: ", a.size(), " vs ", b.size()));
  }
  if (grid.kind() != MeasureKind::kRisk) {
    return absl::InvalidArgumentError("risk dominance needs a risk grid");
  }
  std::vector<double> va, vb;
  for (double alpha : grid.Points()) {
    PERMAUDIT_ASSIGN_OR_RETURN(double da, DominanceValue(a, alpha, epsilon));
    PERMAUDIT_ASSIGN_OR_RETURN(double db, DominanceValue(b, alpha, epsilon));
    va.push_back(da);
    vb.push_back(db);
  }
  return CompareOnGrid(grid, va, vb, Preference::kHigherIsBetter, tolerance);
}

absl::StatusOr<DominanceVerdict> DatasetRiskDominance(
    std::span<const DisplacementVector> a, std::span<const DisplacementVector> b,
    const ExponentGrid& grid, double beta, double epsilon, double tolerance) {
  if (a.empty() || b.empty()) {
    return absl::InvalidArgumentError(
        "dataset risk dominance needs at least one attribute per side");
  }
  if (grid.kind() != MeasureKind::kRisk) {
    return absl::InvalidArgumentError("risk dominance needs a risk grid");
  }
  PERMAUDIT_RETURN_IF_ERROR(CheckExponent(MeasureKind::kRisk, beta));
  for (const auto& side : {a, b}) {
    for (const DisplacementVector& d : side) {
      if (d.size() != a.front().size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record counts differ: ", a.front().size(), " vs ", d.size()));
      }
    }
  }
  std::vector<double> va, vb;
  for (double alpha : grid.Points()) {
    for (const auto& [side, out] :
         {std::pair{a, &va}, std::pair{b, &vb}}) {
      std::vector<double> per_attribute;
      for (const DisplacementVector& d : side) {
        PERMAUDIT_ASSIGN_OR_RETURN(double v, DominanceValue(d, alpha, epsilon));
        per_attribute.push_back(v);
      }
      PERMAUDIT_ASSIGN_OR_RETURN(double value, OuterRisk(per_attribute, beta));
      out->push_back(value);
    }
  }
  return CompareOnGrid(grid, va, vb, Preference::kHigherIsBetter, tolerance);
}

}  // namespace permaudit
