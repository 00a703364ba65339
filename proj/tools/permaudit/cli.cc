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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>

#include <CLI11.hpp>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "output_files.h"
#include "permaudit/anonymizers.h"
#include "permaudit/decomposition.h"
#include "permaudit/infoloss.h"
#include "permaudit/random.h"
#include "permaudit/risk.h"
#include "permaudit/status_macros.h"
#include "report.h"

namespace permaudit::cli {
namespace {

// A failure together with the exit code it maps to.
struct Failure {
  ExitCode code;
  absl::Status status;
};

template <typename T>
using Result = std::variant<T, Failure>;

Failure Usage(absl::Status status) { return {kExitUsage, std::move(status)}; }
Failure Data(absl::Status status) { return {kExitData, std::move(status)}; }

// Flag values shared by audit and dominance.
struct MetricFlags {
  std::string alpha, theta;
  std::string beta = "1";
  std::string pi = "1";
  double epsilon = kDefaultEpsilon;
  double tolerance = kDefaultTolerance;
  bool normalize = false;
  bool no_limits = false;
  std::string direction = "desc";
  int threads = 1;
  std::string out;
  std::string curves;
};

void AddMetricFlags(CLI::App& cmd, MetricFlags& f) {
  cmd.add_option("--alpha", f.alpha,
                 "risk aversion grid: values, min:max:step ranges, -inf");
  cmd.add_option("--theta", f.theta,
                 "information-loss aversion grid (theta >= 1, +inf)");
  cmd.add_option("--beta", f.beta, "outer exponents for D(alpha, beta)");
  cmd.add_option("--pi", f.pi, "outer exponents for I(theta, pi)");
  cmd.add_option("--epsilon", f.epsilon, "stand-in for zero displacements");
  cmd.add_option("--tolerance", f.tolerance, "tie tolerance for dominance");
  cmd.add_flag("--normalize", f.normalize, "divide D and I by n - 1");
  cmd.add_flag("--no-limits", f.no_limits,
               "do not append the -inf/+inf limit points to grids");
  cmd.add_option("--direction", f.direction, "rank direction: desc or asc");
  cmd.add_option("--threads", f.threads, "worker threads (output unchanged)");
  cmd.add_option("--out", f.out, "write the JSON report here");
  cmd.add_option("--curves", f.curves, "directory for CSV curve exports");
}

absl::StatusOr<ExponentGrid> GridFromFlag(MeasureKind kind,
                                          const std::string& text,
                                          const ExponentGrid& fallback,
                                          bool include_limit,
                                          absl::string_view flag) {
  if (text.empty()) {
    return ExponentGrid::Create(kind, fallback.values(), include_limit);
  }
  absl::StatusOr<ExponentGrid> grid =
      ExponentGrid::Parse(kind, text, include_limit);
  if (!grid.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--", flag, ": ", grid.status().message()));
  }
  return grid;
}

Result<AuditConfig> BuildConfig(const MetricFlags& f) {
  AuditConfig config;
  const bool limits = !f.no_limits;
  auto alpha = GridFromFlag(MeasureKind::kRisk, f.alpha,
                            ExponentGrid::DefaultRisk(), limits, "alpha");
  if (!alpha.ok()) return Usage(alpha.status());
  auto theta = GridFromFlag(MeasureKind::kInfoLoss, f.theta,
                            ExponentGrid::DefaultInfoLoss(), limits, "theta");
  if (!theta.ok()) return Usage(theta.status());
  auto beta = GridFromFlag(MeasureKind::kRisk, f.beta, config.beta_grid,
                           limits, "beta");
  if (!beta.ok()) return Usage(beta.status());
  auto pi = GridFromFlag(MeasureKind::kInfoLoss, f.pi, config.pi_grid, limits,
                         "pi");
  if (!pi.ok()) return Usage(pi.status());
  absl::StatusOr<RankDirection> direction = ParseRankDirection(f.direction);
  if (!direction.ok()) return Usage(direction.status());
  if (!(f.epsilon > 0) || !std::isfinite(f.epsilon)) {
    return Usage(absl::InvalidArgumentError("--epsilon must be positive"));
  }
  if (!(f.tolerance >= 0) || !std::isfinite(f.tolerance)) {
    return Usage(absl::InvalidArgumentError("--tolerance must be >= 0"));
  }
  if (f.threads < 1) {
    return Usage(absl::InvalidArgumentError("--threads must be >= 1"));
  }
  config.alpha_grid = *std::move(alpha);
  config.theta_grid = *std::move(theta);
  config.beta_grid = *std::move(beta);
  config.pi_grid = *std::move(pi);
  config.epsilon = f.epsilon;
  config.tolerance = f.tolerance;
  config.normalize = f.normalize;
  config.direction = *direction;
  config.num_threads = f.threads;
  return config;
}

Result<PairedDatasets> LoadPair(const std::string& original,
                                const std::string& masked) {
  absl::StatusOr<Dataset> x = LoadDatasetFile(original);
  if (!x.ok()) return Data(x.status());
  absl::StatusOr<Dataset> y = LoadDatasetFile(masked);
  if (!y.ok()) return Data(y.status());
  absl::StatusOr<PairedDatasets> pair = Pair(*std::move(x), *std::move(y));
  if (!pair.ok()) return Data(pair.status());
  return *std::move(pair);
}

// Writes the report to --out (printing `summary`) or to `out`.
absl::Status EmitReport(const Json& report, const std::string& path,
                        const std::string& summary, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return absl::OkStatus();
  }
  PERMAUDIT_RETURN_IF_ERROR(WriteFileAtomically(path, text));
  out << summary;
  return absl::OkStatus();
}

absl::Status WriteCurves(const std::vector<CurveTable>& curves,
                         const std::string& dir) {
  PERMAUDIT_RETURN_IF_ERROR(EnsureDirectory(dir));
  for (const CurveTable& table : curves) {
    PERMAUDIT_RETURN_IF_ERROR(WriteFileAtomically(
        absl::StrCat(dir, "/", table.stem, ".csv"), table.ToCsv()));
  }
  return absl::OkStatus();
}

std::string FlipText(const Json& verdict) {
  std::vector<std::string> parts;
  for (const Json& interval : verdict["flip_intervals"]) {
    auto show = [](const Json& e) {
      return e.is_string() ? e.get<std::string>()
                           : FormatNumber(e.get<double>());
    };
    parts.push_back(absl::StrCat("(", show(interval["lower"]), ", ",
                                 show(interval["upper"]), "]"));
  }
  if (parts.empty()) return "";
  return absl::StrCat("; flips in ", absl::StrJoin(parts, ", "));
}

std::string VerdictLine(const Json& entry) {
  return absl::StrCat(entry["measure"].get<std::string>(), " ",
                      entry["scope"].get<std::string>(), " ",
                      entry["a"].get<std::string>(), " vs ",
                      entry["b"].get<std::string>(), ": ",
                      entry["relation"].get<std::string>(), FlipText(entry),
                      "\n");
}

// ---------------------------------------------------------------------------
// audit

struct AuditFlags {
  MetricFlags metric;
  std::string original, masked;
  std::string export_z, export_e, export_perms;
};

Result<int> RunAuditCommand(const AuditFlags& flags, std::ostream& out) {
  Result<AuditConfig> config = BuildConfig(flags.metric);
  if (auto* f = std::get_if<Failure>(&config)) return *f;
  Result<PairedDatasets> pair = LoadPair(flags.original, flags.masked);
  if (auto* f = std::get_if<Failure>(&pair)) return *f;

  absl::StatusOr<AuditOutcome> outcome =
      RunAudit(std::get<PairedDatasets>(pair), std::get<AuditConfig>(config),
               flags.original, flags.masked);
  if (!outcome.ok()) return Data(outcome.status());
  const Decomposition& d = outcome->decomposition;

  std::vector<std::pair<std::string, std::string>> exports;
  if (!flags.export_z.empty()) {
    std::ostringstream text;
    WriteDataset(d.reverse_mapped, text);
    exports.emplace_back(flags.export_z, text.str());
  }
  if (!flags.export_e.empty()) {
    std::ostringstream text;
    WriteResiduals(d, text);
    exports.emplace_back(flags.export_e, text.str());
  }
  if (!flags.export_perms.empty()) {
    std::ostringstream text;
    WritePermutations(d.NamedPermutations(), text);
    exports.emplace_back(flags.export_perms, text.str());
  }
  for (const auto& [path, text] : exports) {
    if (absl::Status s = WriteFileAtomically(path, text); !s.ok()) {
      return Usage(s);
    }
  }
  if (!flags.metric.curves.empty()) {
    if (absl::Status s = WriteCurves(outcome->curves, flags.metric.curves);
        !s.ok()) {
      return Usage(s);
    }
  }

  std::string summary;
  for (const Json& a : outcome->report["attributes"]) {
    absl::StrAppend(&summary, a["name"].get<std::string>(),
                    ": T=", FormatNumber(a["T"].get<double>()),
                    " TD=", FormatNumber(a["TD"].get<double>()),
                    " rho=", FormatNumber(a["spearman"].get<double>()), "\n");
  }
  for (const Json& w : outcome->report["warnings"]) {
    absl::StrAppend(&summary, "warning: ", w["message"].get<std::string>(),
                    "\n");
  }
  if (absl::Status s =
          EmitReport(outcome->report, flags.metric.out, summary, out);
      !s.ok()) {
    return Usage(s);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dominance

struct DominanceFlags {
  MetricFlags metric;
  std::string original, masked;
  std::string original_a, masked_a, original_b, masked_b;
  std::string attribute_a, attribute_b;
};

std::string FirstNonEmpty(std::initializer_list<const std::string*> options) {
  for (const std::string* s : options) {
    if (!s->empty()) return *s;
  }
  return "";
}

Result<Decomposition> Decompose(const std::string& original,
                                const std::string& masked,
                                const AuditConfig& config) {
  Result<PairedDatasets> pair = LoadPair(original, masked);
  if (auto* f = std::get_if<Failure>(&pair)) return *f;
  absl::StatusOr<Decomposition> d =
      ReverseMap(std::get<PairedDatasets>(pair),
                 {.direction = config.direction,
                  .num_threads = config.num_threads});
  if (!d.ok()) return Data(d.status());
  return *std::move(d);
}

const DisplacementVector* FindDisplacement(const Decomposition& d,
                                           const std::string& name) {
  for (const DisplacementVector& r : d.displacements) {
    if (r.attribute == name) return &r;
  }
  return nullptr;
}

Json Entry(absl::string_view measure, absl::string_view scope,
           const std::string& a, const std::string& b,
           const DominanceVerdict& verdict) {
  Json entry{{"measure", measure}, {"scope", scope}, {"a", a}, {"b", b}};
  entry.update(VerdictJson(verdict));
  return entry;
}

Result<int> RunDominanceCommand(const DominanceFlags& flags,
                                std::ostream& out) {
  Result<AuditConfig> parsed = BuildConfig(flags.metric);
  if (auto* f = std::get_if<Failure>(&parsed)) return *f;
  const AuditConfig& config = std::get<AuditConfig>(parsed);

  const std::string original_a =
      FirstNonEmpty({&flags.original_a, &flags.original});
  const std::string masked_a = FirstNonEmpty({&flags.masked_a, &flags.masked});
  const std::string original_b = FirstNonEmpty({&flags.original_b, &original_a});
  const std::string masked_b = FirstNonEmpty({&flags.masked_b, &masked_a});
  if (original_a.empty() || masked_a.empty()) {
    return Usage(absl::InvalidArgumentError(
        "dominance needs --original/--masked or --original-a/--masked-a"));
  }
  const bool single_attribute =
      !flags.attribute_a.empty() || !flags.attribute_b.empty();
  if (!single_attribute && flags.original_b.empty() && flags.masked_b.empty()) {
    return Usage(absl::InvalidArgumentError(
        "comparing a pair with itself; give --original-b/--masked-b or "
        "--attribute-a/--attribute-b"));
  }

  Result<Decomposition> ra = Decompose(original_a, masked_a, config);
  if (auto* f = std::get_if<Failure>(&ra)) return *f;
  Result<Decomposition> rb = Decompose(original_b, masked_b, config);
  if (auto* f = std::get_if<Failure>(&rb)) return *f;
  const Decomposition& da = std::get<Decomposition>(ra);
  const Decomposition& db = std::get<Decomposition>(rb);
  if (da.displacements.front().size() != db.displacements.front().size()) {
    return Data(absl::InvalidArgumentError(absl::StrCat(
        "record counts differ: ", da.displacements.front().size(), " vs ",
        db.displacements.front().size())));
  }

  Json report;
  report["meta"] = MetaJson("dominance", config);
  report["meta"]["inputs"] = {
      {"a", {{"original", original_a}, {"masked", masked_a}}},
      {"b", {{"original", original_b}, {"masked", masked_b}}}};
  report["attributes"] = Json::array();
  report["pairs"] = Json::array();
  report["dataset"] = Json::object();
  Json dominance = Json::array();

  auto data_failure = [](const absl::Status& s) { return Data(s); };
  if (single_attribute) {
    const std::string name_a =
        FirstNonEmpty({&flags.attribute_a, &flags.attribute_b});
    const std::string name_b =
        FirstNonEmpty({&flags.attribute_b, &flags.attribute_a});
    const DisplacementVector* a = FindDisplacement(da, name_a);
    const DisplacementVector* b = FindDisplacement(db, name_b);
    if (a == nullptr || b == nullptr) {
      return Data(absl::NotFoundError(absl::StrCat(
          "no attribute named '", a == nullptr ? name_a : name_b, "'")));
    }
    absl::StatusOr<DominanceVerdict> verdict = RiskDominance(
        *a, *b, config.alpha_grid, config.epsilon, config.tolerance);
    if (!verdict.ok()) return data_failure(verdict.status());
    dominance.push_back(Entry("risk", "attribute", name_a, name_b, *verdict));
  } else {
    for (const DisplacementVector& a : da.displacements) {
      const DisplacementVector* b = FindDisplacement(db, a.attribute);
      if (b == nullptr) {
        return Data(absl::NotFoundError(absl::StrCat(
            "attribute '", a.attribute, "' is missing from dataset B")));
      }
      absl::StatusOr<DominanceVerdict> verdict = RiskDominance(
          a, *b, config.alpha_grid, config.epsilon, config.tolerance);
      if (!verdict.ok()) return data_failure(verdict.status());
      dominance.push_back(
          Entry("risk", "attribute", a.attribute, b->attribute, *verdict));
    }
    absl::StatusOr<std::vector<RelativeDisplacement>> rels_a =
        AllRelativeDisplacements(da.displacements);
    if (!rels_a.ok()) return data_failure(rels_a.status());
    std::vector<DisplacementVector> aligned_b;
    for (const DisplacementVector& a : da.displacements) {
      aligned_b.push_back(*FindDisplacement(db, a.attribute));
    }
    absl::StatusOr<std::vector<RelativeDisplacement>> rels_b =
        AllRelativeDisplacements(aligned_b);
    if (!rels_b.ok()) return data_failure(rels_b.status());
    for (size_t k = 0; k < rels_a->size(); ++k) {
      absl::StatusOr<DominanceVerdict> verdict = InfoDominance(
          (*rels_a)[k], (*rels_b)[k], config.theta_grid, config.tolerance);
      if (!verdict.ok()) return data_failure(verdict.status());
      dominance.push_back(Entry("infoloss", "pair", (*rels_a)[k].Key(),
                                (*rels_b)[k].Key(), *verdict));
    }
    for (double beta : config.beta_grid.Points()) {
      absl::StatusOr<DominanceVerdict> verdict = DatasetRiskDominance(
          da.displacements, aligned_b, config.alpha_grid, beta,
          config.epsilon, config.tolerance);
      if (!verdict.ok()) return data_failure(verdict.status());
      Json entry = Entry("risk", "dataset", "A", "B", *verdict);
      entry["beta"] = ExponentJson(beta);
      dominance.push_back(std::move(entry));
    }
    if (!rels_a->empty()) {
      for (double pi : config.pi_grid.Points()) {
        absl::StatusOr<DominanceVerdict> verdict = DatasetInfoDominance(
            *rels_a, *rels_b, config.theta_grid, pi, config.tolerance);
        if (!verdict.ok()) return data_failure(verdict.status());
        Json entry = Entry("infoloss", "dataset", "A", "B", *verdict);
        entry["pi"] = ExponentJson(pi);
        dominance.push_back(std::move(entry));
      }
    }
  }
  report["dominance"] = std::move(dominance);
  report["warnings"] = Json::array();
  if (da.TieEvents() + db.TieEvents() > 0) {
    report["warnings"].push_back(
        {{"code", "ties"},
         {"message", absl::StrCat(da.TieEvents() + db.TieEvents(),
                                  " tie group(s) were broken by row order; "
                                  "verdicts depend on record order")}});
  }

  std::string summary;
  for (const Json& entry : report["dominance"]) {
    absl::StrAppend(&summary, VerdictLine(entry));
  }
  if (absl::Status s = EmitReport(report, flags.metric.out, summary, out);
      !s.ok()) {
    return Usage(s);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// anonymize

struct AnonymizeFlags {
  std::string original, out, method;
  uint64_t seed = 0;
  std::string sigma, rows, blocks, perm_file;
  int dmax = -1;
  int threads = 1;
};

absl::StatusOr<std::vector<double>> ParseDoubles(absl::string_view text,
                                                 absl::string_view flag) {
  std::vector<double> values;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    double v;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(item), &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("--", flag, ": cannot parse '", item, "'"));
    }
    values.push_back(v);
  }
  return values;
}

absl::StatusOr<std::vector<int>> ParseRows(absl::string_view text) {
  std::vector<int> rows;
  for (absl::string_view item :
       absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    int row;
    if (!absl::SimpleAtoi(absl::StripAsciiWhitespace(item), &row) || row < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "--rows: '", item, "' is not a record number (rows start at 1)"));
    }
    rows.push_back(row - 1);
  }
  return rows;
}

std::vector<std::vector<std::string>> ParseBlocks(absl::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  for (absl::string_view block : absl::StrSplit(text, ';')) {
    std::vector<std::string> names;
    for (absl::string_view name :
         absl::StrSplit(block, ',', absl::SkipWhitespace())) {
      names.emplace_back(absl::StripAsciiWhitespace(name));
    }
    blocks.push_back(std::move(names));
  }
  return blocks;
}

Failure FromAnonymizer(const absl::Status& status) {
  if (absl::IsFailedPrecondition(status)) {
    return {kExitInfeasible, status};
  }
  return Usage(status);
}

Result<int> RunAnonymizeCommand(const AnonymizeFlags& flags,
                                std::ostream& out) {
  absl::StatusOr<Dataset> x = LoadDatasetFile(flags.original);
  if (!x.ok()) return Data(x.status());
  const ExecutionOptions exec{.num_threads = std::max(1, flags.threads)};

  Json parameters = Json::object();
  std::optional<NoiseSpec> noise;
  if (!flags.sigma.empty()) {
    absl::StatusOr<std::vector<double>> sigma =
        ParseDoubles(flags.sigma, "sigma");
    if (!sigma.ok()) return Usage(sigma.status());
    noise = NoiseSpec{*sigma, flags.seed};
    parameters["sigma"] = *sigma;
  }
  auto require = [&](bool present, absl::string_view what) {
    return present ? std::optional<Failure>()
                   : Usage(absl::InvalidArgumentError(absl::StrCat(
                         "method '", flags.method, "' needs ", what)));
  };

  absl::StatusOr<Dataset> y = absl::UnknownError("no method ran");
  const std::string& m = flags.method;
  if (m == "noise") {
    if (auto f = require(noise.has_value(), "--sigma")) return *f;
    y = AddNoise(*x, *noise, exec);
  } else if (m == "local-noise") {
    if (auto f = require(noise.has_value(), "--sigma")) return *f;
    if (auto f = require(!flags.rows.empty(), "--rows")) return *f;
    absl::StatusOr<std::vector<int>> rows = ParseRows(flags.rows);
    if (!rows.ok()) return Usage(rows.status());
    std::vector<int> one_based;
    for (int r : *rows) one_based.push_back(r + 1);
    parameters["rows"] = one_based;
    y = LocalNoise(*x, *rows, *noise, exec);
  } else if (m == "block-permute") {
    if (auto f = require(!flags.blocks.empty(), "--blocks")) return *f;
    BlockSpec spec{ParseBlocks(flags.blocks), flags.seed};
    parameters["blocks"] = spec.blocks;
    y = BlockPermute(*x, spec);
  } else if (m == "apply-perms") {
    if (auto f = require(!flags.perm_file.empty(), "--perm-file")) return *f;
    absl::StatusOr<std::vector<NamedPermutation>> named =
        ReadPermutationsFile(flags.perm_file);
    if (!named.ok()) return Data(named.status());
    std::map<std::string, Permutation> by_name;
    for (NamedPermutation& np : *named) {
      if (!by_name.emplace(np.attribute, np.permutation).second) {
        return Data(absl::InvalidArgumentError(absl::StrCat(
            "permutation file lists '", np.attribute, "' twice")));
      }
    }
    std::vector<Permutation> perms;
    for (const AttributeColumn& column : x->columns()) {
      auto it = by_name.find(column.name);
      if (it == by_name.end()) {
        return Data(absl::InvalidArgumentError(absl::StrCat(
            "permutation file has no line for '", column.name, "'")));
      }
      perms.push_back(it->second);
    }
    if (by_name.size() != perms.size()) {
      return Data(absl::InvalidArgumentError(
          "permutation file names attributes the dataset does not have"));
    }
    parameters["perm_file"] = flags.perm_file;
    y = ApplyPermutations(*x, perms, noise, exec);
  } else if (m == "bounded-perm") {
    if (auto f = require(flags.dmax >= 0, "--dmax >= 0")) return *f;
    if (flags.dmax > x->num_records() - 1) {
      return Failure{kExitInfeasible,
                     absl::InvalidArgumentError(absl::StrCat(
                         "--dmax ", flags.dmax, " exceeds n - 1 = ",
                         x->num_records() - 1))};
    }
    parameters["dmax"] = flags.dmax;
    y = BoundedPermute(*x, flags.dmax, flags.seed);
  } else {
    return Usage(absl::InvalidArgumentError(absl::StrCat(
        "unknown method '", m,
        "'; expected noise, local-noise, block-permute, apply-perms or "
        "bounded-perm")));
  }
  if (!y.ok()) return FromAnonymizer(y.status());

  std::ostringstream text;
  WriteDataset(*y, text);
  if (absl::Status s = WriteFileAtomically(flags.out, text.str()); !s.ok()) {
    return Usage(s);
  }
  Json manifest;
  manifest["tool"] = "permaudit";
  manifest["version"] = kToolVersion;
  manifest["command"] = "anonymize";
  manifest["method"] = m;
  manifest["input"] = flags.original;
  manifest["output"] = flags.out;
  manifest["seed"] = flags.seed;
  manifest["generator"] = {{"name", kGeneratorName},
                           {"version", kGeneratorVersion}};
  manifest["parameters"] = std::move(parameters);
  if (absl::Status s = WriteFileAtomically(
          absl::StrCat(flags.out, ".manifest.json"), manifest.dump(2) + "\n");
      !s.ok()) {
    return Usage(s);
  }
  out << "wrote " << flags.out << " (" << m << ", seed " << flags.seed
      << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Configuration files: "key = value" lines, read as if "--key=value" had
// been given before the flags on the command line.

absl::StatusOr<std::vector<std::string>> ReadConfigFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot open config file '", path, "'"));
  }
  std::vector<std::string> flags;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    absl::string_view text = absl::StripAsciiWhitespace(line);
    if (text.empty() || text.front() == '#') continue;
    const size_t eq = text.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", number, ": expected 'key = value'"));
    }
    absl::string_view key = absl::StripAsciiWhitespace(text.substr(0, eq));
    absl::string_view value = absl::StripAsciiWhitespace(text.substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.remove_prefix(1);
    if (key.empty() || key == "config") {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", number, ": bad key"));
    }
    flags.push_back(absl::StrCat("--", key, "=", value));
  }
  return flags;
}

// Expands every --config FILE into the flags it contains.
absl::StatusOr<std::vector<std::string>> ExpandConfig(
    const std::vector<std::string>& args) {
  if (args.size() < 2) return args;
  std::vector<std::string> head(args.begin(), args.begin() + 2);
  std::vector<std::string> tail;
  for (size_t i = 2; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) {
        return absl::InvalidArgumentError("--config needs a file name");
      }
      path = args[++i];
    } else if (absl::StartsWith(args[i], "--config=")) {
      path = args[i].substr(9);
    } else {
      tail.push_back(args[i]);
      continue;
    }
    PERMAUDIT_ASSIGN_OR_RETURN(std::vector<std::string> from_file,
                               ReadConfigFile(path));
    head.insert(head.end(), from_file.begin(), from_file.end());
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

int RunCli(const std::vector<std::string>& raw_args, std::ostream& out,
           std::ostream& err) {
  absl::StatusOr<std::vector<std::string>> args = ExpandConfig(raw_args);
  if (!args.ok()) {
    err << "permaudit: " << args.status().message() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Audit anonymized microdata through its permutation "
               "decomposition.",
               "permaudit"};
  app.option_defaults()->multi_option_policy(
      CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::string unused_config;
  auto add_config = [&unused_config](CLI::App* cmd) {
    cmd->add_option("--config", unused_config,
                    "file of 'key = value' lines, read before other flags");
  };

  AuditFlags audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "decompose a masked dataset and score it");
  audit_cmd->add_option("--original", audit.original, "original data (CSV)")
      ->required();
  audit_cmd->add_option("--masked", audit.masked, "masked data (CSV)")
      ->required();
  audit_cmd->add_option("--export-z", audit.export_z,
                        "write the reverse-mapped dataset Z");
  audit_cmd->add_option("--export-e", audit.export_e,
                        "write the residuals E = Y - Z");
  audit_cmd->add_option("--export-perms", audit.export_perms,
                        "write the extracted permutations");
  AddMetricFlags(*audit_cmd, audit.metric);
  add_config(audit_cmd);

  DominanceFlags dom;
  CLI::App* dom_cmd = app.add_subcommand(
      "dominance", "compare two maskings across aversion levels");
  dom_cmd->add_option("--original", dom.original, "original data for A and B");
  dom_cmd->add_option("--masked", dom.masked, "masked data for A and B");
  dom_cmd->add_option("--original-a", dom.original_a);
  dom_cmd->add_option("--masked-a", dom.masked_a);
  dom_cmd->add_option("--original-b", dom.original_b);
  dom_cmd->add_option("--masked-b", dom.masked_b);
  dom_cmd->add_option("--attribute-a", dom.attribute_a,
                      "compare a single attribute of A ...");
  dom_cmd->add_option("--attribute-b", dom.attribute_b,
                      "... against a single attribute of B");
  AddMetricFlags(*dom_cmd, dom.metric);
  add_config(dom_cmd);

  AnonymizeFlags anon;
  CLI::App* anon_cmd =
      app.add_subcommand("anonymize", "apply a reference masking method");
  anon_cmd->add_option("--original", anon.original, "data to mask (CSV)")
      ->required();
  anon_cmd->add_option("--out", anon.out, "masked output (CSV)")->required();
  anon_cmd
      ->add_option("--method", anon.method,
                   "noise, local-noise, block-permute, apply-perms or "
                   "bounded-perm")
      ->required();
  anon_cmd->add_option("--seed", anon.seed, "64-bit seed");
  anon_cmd->add_option("--sigma", anon.sigma,
                       "noise standard deviations, one or one per attribute");
  anon_cmd->add_option("--rows", anon.rows, "records to mask, e.g. 2,3");
  anon_cmd->add_option("--blocks", anon.blocks,
                       "attribute blocks, e.g. 'X_1,X_2;X_3'");
  anon_cmd->add_option("--perm-file", anon.perm_file,
                       "permutations, one 'name: i1 ... in' line each");
  anon_cmd->add_option("--dmax", anon.dmax, "largest allowed displacement");
  anon_cmd->add_option("--threads", anon.threads, "worker threads");
  add_config(anon_cmd);

  CLI::App* demo_cmd =
      app.add_subcommand("demo", "walk through the bundled five-record example");

  std::vector<const char*> argv;
  for (const std::string& a : *args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Result<int> result = kExitOk;
  if (*audit_cmd) {
    result = RunAuditCommand(audit, out);
  } else if (*dom_cmd) {
    result = RunDominanceCommand(dom, out);
  } else if (*anon_cmd) {
    result = RunAnonymizeCommand(anon, out);
  } else if (*demo_cmd) {
    PrintDemo(out);
  }
  if (const Failure* f = std::get_if<Failure>(&result)) {
    err << "permaudit: " << f->status.message() << "\n";
    return f->code;
  }
  return std::get<int>(result);
}

}  // namespace permaudit::cli
