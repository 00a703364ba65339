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

// Disclosure-risk measures over extracted permutations.
//
// Higher values mean records were moved further from their original rank,
// i.e. better protection. The aversion exponent alpha <= 1 shifts weight
// toward the least-moved records as it decreases; alpha -> -inf scores an
// attribute by its single least-moved record.

#ifndef PERMAUDIT_RISK_H_
#define PERMAUDIT_RISK_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "permaudit/dominance.h"
#include "permaudit/exponent_grid.h"
#include "permaudit/permutation.h"

namespace permaudit {

inline constexpr double kDefaultEpsilon = 1e-8;
inline constexpr double kDefaultTolerance = 1e-9;

struct RiskOptions {
  // Stand-in for zero displacements so that non-positive exponents work.
  double epsilon = kDefaultEpsilon;
  // Divide by n - 1, the largest possible displacement, giving [0, 1].
  bool normalize = false;
};

struct CurvePoint {
  double exponent;
  double value;
};

// 1 - fixed_points / n. 0 for the identity, 1 when every record moved.
double TraceRatio(const Permutation& permutation);

// Power mean of the epsilon-substituted |displacements| with exponent alpha.
absl::StatusOr<double> AttributeRisk(const DisplacementVector& d, double alpha,
                                     const RiskOptions& options = {});

// TraceRatio * AttributeRisk(alpha = 1): average displacement discounted by
// the share of records left in place.
absl::StatusOr<double> CombinedRisk(const Permutation& permutation,
                                    const DisplacementVector& d,
                                    double epsilon = kDefaultEpsilon);

// Outer power mean (exponent beta <= 1) over the per-attribute risks at
// alpha. beta -> -inf scores the dataset by its least-protected attribute.
absl::StatusOr<double> DatasetRisk(std::span<const DisplacementVector> ds,
                                   double alpha, double beta,
                                   const RiskOptions& options = {});

absl::StatusOr<std::vector<CurvePoint>> RiskCurve(
    const DisplacementVector& d, const ExponentGrid& grid,
    const RiskOptions& options = {});

// A dominates B when D_A(alpha) >= D_B(alpha) - tolerance at every grid
// point. Comparisons use unnormalized values. At alpha > 0 zero
// displacements enter as zeros rather than epsilon, so values_a and values_b
// in the verdict are slightly below the RiskCurve values there.
absl::StatusOr<DominanceVerdict> RiskDominance(
    const DisplacementVector& a, const DisplacementVector& b,
    const ExponentGrid& grid, double epsilon = kDefaultEpsilon,
    double tolerance = kDefaultTolerance);

// Compares D(alpha, beta) of two datasets over the alpha grid at a fixed
// beta, with the same treatment of zeros as RiskDominance.
absl::StatusOr<DominanceVerdict> DatasetRiskDominance(
    std::span<const DisplacementVector> a, std::span<const DisplacementVector> b,
    const ExponentGrid& grid, double beta, double epsilon = kDefaultEpsilon,
    double tolerance = kDefaultTolerance);

}  // namespace permaudit

#endif  // PERMAUDIT_RISK_H_
