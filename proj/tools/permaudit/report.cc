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

#include "report.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "permaudit/infoloss.h"
#include "permaudit/running_example.h"
#include "permaudit/status_macros.h"

namespace permaudit::cli {
namespace {

Json GridJson(const ExponentGrid& grid) {
  Json out = Json::array();
  for (double e : grid.Points()) out.push_back(ExponentJson(e));
  return out;
}

Json Warning(absl::string_view code, std::string message) {
  return Json{{"code", code}, {"message", std::move(message)}};
}

void AddTieWarnings(const Decomposition& d, Json& warnings) {
  for (size_t j = 0; j < d.original_ranks.size(); ++j) {
    const int in_original = d.original_ranks[j].tie_events;
    const int in_masked = d.masked_ranks[j].tie_events;
    if (in_original == 0 && in_masked == 0) continue;
    warnings.push_back(Warning(
        "ties",
        absl::StrCat("attribute '", d.original_ranks[j].attribute, "': ",
                     in_original, " tie group(s) in the original and ",
                     in_masked,
                     " in the masked data were broken by row order; the "
                     "extracted permutation depends on record order")));
  }
}

void AddWorkedExampleWarnings(const Decomposition& d, Json& warnings) {
  const RiskOptions options;
  const double d2 = *AttributeRisk(d.displacements[1], 0.5, options);
  const double d3 = *AttributeRisk(d.displacements[2], 0.5, options);
  warnings.push_back(Warning(
      "worked_example_risk_alpha_0.5",
      absl::StrCat("the reference worked example prints D_2(0.5) = 0.97 and "
                   "D_3(0.5) = 1.06; the power mean of the displacement "
                   "vectors gives ",
                   d2, " and ", d3, ", which this report uses")));
  const RelativeDisplacement rel =
      *RelativeDisplacementOf(d.displacements[1], d.displacements[2]);
  warnings.push_back(Warning(
      "worked_example_infoloss",
      absl::StrCat("the reference worked example prints I(1) = 2 and "
                   "I(4) = 2.49 for pair V2|V3 with delta (",
                   absl::StrJoin(rel.delta, ", "), "); the power means are ",
                   *PairInfoLoss(rel, 1), " and ", *PairInfoLoss(rel, 4))));
  warnings.push_back(Warning(
      "worked_example_residuals",
      absl::StrCat("the reference worked example prints E_1(4) = 2 and "
                   "E_2(3) = 0; Y - Z gives ",
                   d.residuals[0][3], " and ", d.residuals[1][2])));
}

std::string CsvExponent(double e) { return FormatExponent(e); }

}  // namespace

std::string CurveTable::ToCsv() const {
  std::ostringstream out;
  out << absl::StrJoin(header, ",") << '\n';
  for (const auto& row : rows) out << absl::StrJoin(row, ",") << '\n';
  return out.str();
}

Json ExponentJson(double exponent) {
  if (std::isinf(exponent)) return exponent < 0 ? "-inf" : "+inf";
  return exponent;
}

Json VerdictJson(const DominanceVerdict& verdict) {
  Json out;
  out["relation"] = RelationName(verdict.relation);
  Json crossings = Json::array();
  for (double e : verdict.crossing_points) crossings.push_back(ExponentJson(e));
  out["crossing_points"] = std::move(crossings);
  Json intervals = Json::array();
  for (const FlipInterval& f : verdict.flip_intervals) {
    intervals.push_back(
        {{"lower", ExponentJson(f.lower)}, {"upper", ExponentJson(f.upper)}});
  }
  out["flip_intervals"] = std::move(intervals);
  Json grid = Json::array();
  for (double e : verdict.points) grid.push_back(ExponentJson(e));
  out["grid"] = std::move(grid);
  out["values_a"] = verdict.values_a;
  out["values_b"] = verdict.values_b;
  return out;
}

Json MetaJson(absl::string_view command, const AuditConfig& config) {
  Json meta;
  meta["tool"] = "permaudit";
  meta["version"] = kToolVersion;
  meta["schema_version"] = kReportSchemaVersion;
  meta["command"] = command;
  meta["config"] = {
      {"alpha_grid", GridJson(config.alpha_grid)},
      {"theta_grid", GridJson(config.theta_grid)},
      {"beta_grid", GridJson(config.beta_grid)},
      {"pi_grid", GridJson(config.pi_grid)},
      {"epsilon", config.epsilon},
      {"tolerance", config.tolerance},
      {"normalized", config.normalize},
      {"rank_direction", RankDirectionName(config.direction)},
  };
  return meta;
}

absl::StatusOr<AuditOutcome> RunAudit(const PairedDatasets& pair,
                                      const AuditConfig& config,
                                      const std::string& original_path,
                                      const std::string& masked_path) {
  PERMAUDIT_ASSIGN_OR_RETURN(
      Decomposition d,
      ReverseMap(pair, {.direction = config.direction,
                        .num_threads = config.num_threads}));
  const RiskOptions options{.epsilon = config.epsilon,
                            .normalize = config.normalize};
  const Dataset& x = pair.original;
  const int p = x.num_attributes();

  AuditOutcome outcome{std::move(d), {}, {}};
  const Decomposition& dec = outcome.decomposition;
  Json& report = outcome.report;

  report["meta"] = MetaJson("audit", config);
  report["meta"]["inputs"] = {{"original", original_path},
                              {"masked", masked_path}};
  report["meta"]["n"] = x.num_records();
  report["meta"]["p"] = p;

  Json attributes = Json::array();
  for (int j = 0; j < p; ++j) {
    const DisplacementVector& r = dec.displacements[j];
    CurveTable table{absl::StrCat("risk_", r.attribute), {"alpha", "value"},
                     {}};
    Json curve = Json::array();
    PERMAUDIT_ASSIGN_OR_RETURN(std::vector<CurvePoint> points,
                               RiskCurve(r, config.alpha_grid, options));
    for (const CurvePoint& point : points) {
      curve.push_back({{"alpha", ExponentJson(point.exponent)},
                       {"value", point.value}});
      table.rows.push_back(
          {CsvExponent(point.exponent), FormatNumber(point.value)});
    }
    outcome.curves.push_back(std::move(table));

    const double t = TraceRatio(dec.permutations[j]);
    PERMAUDIT_ASSIGN_OR_RETURN(double d1, AttributeRisk(r, 1, options));
    PERMAUDIT_ASSIGN_OR_RETURN(
        double rho, Spearman(dec.original_ranks[j], dec.masked_ranks[j]));
    Json attribute;
    attribute["name"] = r.attribute;
    attribute["kind"] = x.column(j).is_numeric() ? "numeric" : "ordered";
    attribute["T"] = t;
    attribute["TD"] = t * d1;
    attribute["spearman"] = rho;
    attribute["permutation"] = dec.permutations[j].OneBasedImage();
    attribute["displacement"] = r.raw;
    attribute["tie_events"] = {{"original", dec.original_ranks[j].tie_events},
                               {"masked", dec.masked_ranks[j].tie_events}};
    attribute["D_curve"] = std::move(curve);
    attributes.push_back(std::move(attribute));
  }
  report["attributes"] = std::move(attributes);

  PERMAUDIT_ASSIGN_OR_RETURN(std::vector<RelativeDisplacement> rels,
                             AllRelativeDisplacements(dec.displacements));
  Json pairs = Json::array();
  for (const RelativeDisplacement& rel : rels) {
    CurveTable table{absl::StrCat("infoloss_", rel.first, "_", rel.second),
                     {"theta", "value"},
                     {}};
    Json curve = Json::array();
    PERMAUDIT_ASSIGN_OR_RETURN(
        std::vector<CurvePoint> points,
        InfoLossCurve(rel, config.theta_grid, config.normalize));
    for (const CurvePoint& point : points) {
      curve.push_back({{"theta", ExponentJson(point.exponent)},
                       {"value", point.value}});
      table.rows.push_back(
          {CsvExponent(point.exponent), FormatNumber(point.value)});
    }
    outcome.curves.push_back(std::move(table));
    pairs.push_back({{"first", rel.first},
                     {"second", rel.second},
                     {"delta", rel.delta},
                     {"I_curve", std::move(curve)}});
  }
  report["pairs"] = std::move(pairs);

  CurveTable risk_grid{"dataset_risk", {"alpha", "beta", "value"}, {}};
  Json d_grid = Json::array();
  for (double alpha : config.alpha_grid.Points()) {
    for (double beta : config.beta_grid.Points()) {
      PERMAUDIT_ASSIGN_OR_RETURN(
          double value, DatasetRisk(dec.displacements, alpha, beta, options));
      d_grid.push_back({{"alpha", ExponentJson(alpha)},
                        {"beta", ExponentJson(beta)},
                        {"value", value}});
      risk_grid.rows.push_back(
          {CsvExponent(alpha), CsvExponent(beta), FormatNumber(value)});
    }
  }
  outcome.curves.push_back(std::move(risk_grid));

  Json i_grid = Json::array();
  if (!rels.empty()) {
    CurveTable info_grid{"dataset_infoloss", {"theta", "pi", "value"}, {}};
    for (double theta : config.theta_grid.Points()) {
      for (double pi : config.pi_grid.Points()) {
        PERMAUDIT_ASSIGN_OR_RETURN(
            double value, DatasetInfoLoss(rels, theta, pi, config.normalize));
        i_grid.push_back({{"theta", ExponentJson(theta)},
                          {"pi", ExponentJson(pi)},
                          {"value", value}});
        info_grid.rows.push_back(
            {CsvExponent(theta), CsvExponent(pi), FormatNumber(value)});
      }
    }
    outcome.curves.push_back(std::move(info_grid));
  }
  report["dataset"] = {{"D_grid", std::move(d_grid)},
                       {"I_grid", std::move(i_grid)}};

  // Which attribute's masking protects better, attribute against attribute.
  Json dominance = Json::array();
  for (int j = 0; j < p; ++j) {
    for (int k = j + 1; k < p; ++k) {
      PERMAUDIT_ASSIGN_OR_RETURN(
          DominanceVerdict verdict,
          RiskDominance(dec.displacements[j], dec.displacements[k],
                        config.alpha_grid, config.epsilon, config.tolerance));
      Json entry{{"measure", "risk"},
                 {"scope", "attribute"},
                 {"a", dec.displacements[j].attribute},
                 {"b", dec.displacements[k].attribute}};
      entry.update(VerdictJson(verdict));
      dominance.push_back(std::move(entry));
    }
  }
  report["dominance"] = std::move(dominance);

  Json warnings = Json::array();
  AddTieWarnings(dec, warnings);
  if (running_example::IsBundledPair(pair.original, pair.masked)) {
    AddWorkedExampleWarnings(dec, warnings);
  }
  report["warnings"] = std::move(warnings);
  return outcome;
}

}  // namespace permaudit::cli
