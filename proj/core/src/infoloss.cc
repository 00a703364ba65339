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

#include "permaudit/infoloss.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "permaudit/power_mean.h"
#include "permaudit/status_macros.h"

namespace permaudit {

absl::StatusOr<RelativeDisplacement> RelativeDisplacementOf(
    const DisplacementVector& first, const DisplacementVector& second) {
  if (first.attribute == second.attribute) {
    return absl::InvalidArgumentError(absl::StrCat(
        "relative displacement needs two distinct attributes, got '",
        first.attribute, "' twice"));
  }
  if (first.size() != second.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record counts differ: ", first.size(), " vs ", second.size()));
  }
  RelativeDisplacement rel{first.attribute, second.attribute, {}};
  rel.delta.resize(first.size());
  for (int i = 0; i < first.size(); ++i) {
    rel.delta[i] = first.raw[i] - second.raw[i];
  }
  return rel;
}

absl::StatusOr<std::vector<RelativeDisplacement>> AllRelativeDisplacements(
    std::span<const DisplacementVector> displacements) {
  std::vector<RelativeDisplacement> out;
  for (size_t j = 0; j < displacements.size(); ++j) {
    for (size_t k = j + 1; k < displacements.size(); ++k) {
      PERMAUDIT_ASSIGN_OR_RETURN(
          RelativeDisplacement rel,
          RelativeDisplacementOf(displacements[j], displacements[k]));
      out.push_back(std::move(rel));
    }
  }
  return out;
}

absl::StatusOr<double> PairInfoLoss(const RelativeDisplacement& rel,
                                    double theta, bool normalize) {
  PERMAUDIT_RETURN_IF_ERROR(CheckExponent(MeasureKind::kInfoLoss, theta));
  if (normalize && rel.size() < 2) {
    return absl::InvalidArgumentError("normalization requires n >= 2");
  }
  std::vector<double> magnitudes(rel.delta.size());
  for (size_t i = 0; i < rel.delta.size(); ++i) {
    magnitudes[i] = std::abs(rel.delta[i]);
  }
  PERMAUDIT_ASSIGN_OR_RETURN(double value,
                             NonNegativePowerMean(magnitudes, theta));
  if (normalize) value /= rel.size() - 1;
  return value;
}

absl::StatusOr<std::vector<CurvePoint>> InfoLossCurve(
    const RelativeDisplacement& rel, const ExponentGrid& grid,
    bool normalize) {
  if (grid.kind() != MeasureKind::kInfoLoss) {
    return absl::InvalidArgumentError(
        "information-loss curve needs an info-loss grid");
  }
  std::vector<CurvePoint> curve;
  for (double theta : grid.Points()) {
    PERMAUDIT_ASSIGN_OR_RETURN(double value,
                               PairInfoLoss(rel, theta, normalize));
    curve.push_back({theta, value});
  }
  return curve;
}

absl::StatusOr<double> DatasetInfoLoss(
    std::span<const RelativeDisplacement> rels, double theta, double pi,
    bool normalize) {
  PERMAUDIT_RETURN_IF_ERROR(CheckExponent(MeasureKind::kInfoLoss, pi));
  if (rels.empty()) {
    return absl::InvalidArgumentError(
        "dataset information loss needs at least one attribute pair");
  }
  std::set<std::string> attributes;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const RelativeDisplacement& rel : rels) {
    if (rel.first == rel.second) {
      return absl::InvalidArgumentError(
          absl::StrCat("pair '", rel.Key(), "' repeats an attribute"));
    }
    attributes.insert(rel.first);
    attributes.insert(rel.second);
    auto key = std::minmax(rel.first, rel.second);
    if (!pairs.emplace(key.first, key.second).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("pair '", rel.Key(), "' is listed more than once"));
    }
  }
  const size_t p = attributes.size();
  if (pairs.size() != p * (p - 1) / 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pairs cover ", pairs.size(), " of the ", p * (p - 1) / 2,
        " attribute pairs"));
  }
  std::vector<double> per_pair;
  per_pair.reserve(rels.size());
  for (const RelativeDisplacement& rel : rels) {
    PERMAUDIT_ASSIGN_OR_RETURN(double value,
                               PairInfoLoss(rel, theta, normalize));
    per_pair.push_back(value);
  }
  return NonNegativePowerMean(per_pair, pi);
}

absl::StatusOr<DominanceVerdict> InfoDominance(const RelativeDisplacement& a,
                                               const RelativeDisplacement& b,
                                               const ExponentGrid& grid,
                                               double tolerance) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record counts differ: ", a.size(), " vs ", b.size()));
  }
  PERMAUDIT_ASSIGN_OR_RETURN(std::vector<CurvePoint> curve_a,
                             InfoLossCurve(a, grid));
  PERMAUDIT_ASSIGN_OR_RETURN(std::vector<CurvePoint> curve_b,
                             InfoLossCurve(b, grid));
  std::vector<double> va, vb;
  for (const CurvePoint& p : curve_a) va.push_back(p.value);
  for (const CurvePoint& p : curve_b) vb.push_back(p.value);
  return CompareOnGrid(grid, va, vb, Preference::kLowerIsBetter, tolerance);
}

absl::StatusOr<double> Spearman(const Ranking& original,
                                const Ranking& reverse_mapped) {
  const int n = original.size();
  if (n != reverse_mapped.size()) {
    return absl::InvalidArgumentError("rankings differ in length");
  }
  if (original.direction != reverse_mapped.direction) {
    return absl::InvalidArgumentError("rankings use different directions");
  }
  if (n < 2) return absl::InvalidArgumentError("Spearman needs n >= 2");
  long long sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const long long d = original.ranks[i] - reverse_mapped.ranks[i];
    sum_sq += d * d;
  }
  const double nn = n;
  return 1.0 - 6.0 * static_cast<double>(sum_sq) / (nn * (nn * nn - 1.0));
}

absl::StatusOr<DominanceVerdict> DatasetInfoDominance(
    std::span<const RelativeDisplacement> a,
    std::span<const RelativeDisplacement> b, const ExponentGrid& grid,
    double pi, double tolerance) {
  if (grid.kind() != MeasureKind::kInfoLoss) {
    return absl::InvalidArgumentError(
        "information dominance needs an info-loss grid");
  }
  std::vector<double> va, vb;
  for (double theta : grid.Points()) {
    PERMAUDIT_ASSIGN_OR_RETURN(double ia, DatasetInfoLoss(a, theta, pi));
    PERMAUDIT_ASSIGN_OR_RETURN(double ib, DatasetInfoLoss(b, theta, pi));
    va.push_back(ia);
    vb.push_back(ib);
  }
  return CompareOnGrid(grid, va, vb, Preference::kLowerIsBetter, tolerance);
}

}  // namespace permaudit
