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

#ifndef PERMAUDIT_TOOLS_PERMAUDIT_REPORT_H_
#define PERMAUDIT_TOOLS_PERMAUDIT_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "absl/status/statusor.h"
#include "permaudit/decomposition.h"
#include "permaudit/dominance.h"
#include "permaudit/exponent_grid.h"
#include "permaudit/microdata.h"
#include "permaudit/risk.h"

namespace permaudit::cli {

using Json = nlohmann::ordered_json;

inline constexpr char kToolVersion[] = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct AuditConfig {
  ExponentGrid alpha_grid = ExponentGrid::DefaultRisk();
  ExponentGrid theta_grid = ExponentGrid::DefaultInfoLoss();
  // Outer exponents for the dataset-level measures.
  ExponentGrid beta_grid = *ExponentGrid::Create(MeasureKind::kRisk, {1}, true);
  ExponentGrid pi_grid =
      *ExponentGrid::Create(MeasureKind::kInfoLoss, {1}, true);
  double epsilon = kDefaultEpsilon;
  double tolerance = kDefaultTolerance;
  bool normalize = false;
  RankDirection direction = RankDirection::kDescending;
  int num_threads = 1;
};

// One plot-ready table, written as <stem>.csv.
struct CurveTable {
  std::string stem;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string ToCsv() const;
};

struct AuditOutcome {
  Decomposition decomposition;
  Json report;
  std::vector<CurveTable> curves;
};

// Grid points go into JSON as numbers, limits as the strings "-inf" and
// "+inf".
Json ExponentJson(double exponent);
Json VerdictJson(const DominanceVerdict& verdict);

Json MetaJson(absl::string_view command, const AuditConfig& config);

absl::StatusOr<AuditOutcome> RunAudit(const PairedDatasets& pair,
                                      const AuditConfig& config,
                                      const std::string& original_path,
                                      const std::string& masked_path);

}  // namespace permaudit::cli

#endif  // PERMAUDIT_TOOLS_PERMAUDIT_REPORT_H_
