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

#include "permaudit/microdata.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace permaudit {

absl::string_view RankDirectionName(RankDirection direction) {
  return direction == RankDirection::kDescending ? "descending" : "ascending";
}

absl::StatusOr<RankDirection> ParseRankDirection(absl::string_view text) {
  const std::string lowered = absl::AsciiStrToLower(text);
  if (lowered == "descending" || lowered == "desc") {
    return RankDirection::kDescending;
  }
  if (lowered == "ascending" || lowered == "asc") {
    return RankDirection::kAscending;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown rank direction '", text,
                   "'; expected 'descending' or 'ascending'"));
}

absl::StatusOr<Dataset> Dataset::Create(std::string name,
                                        std::vector<AttributeColumn> columns) {
  if (columns.empty()) {
    return absl::InvalidArgumentError("dataset has no attributes");
  }
  const size_t n = columns.front().values.size();
  std::set<std::string, std::less<>> seen;
  for (const AttributeColumn& column : columns) {
    if (column.name.empty()) {
      return absl::InvalidArgumentError("empty column name");
    }
    if (!seen.insert(column.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate column name '", column.name, "'"));
    }
    if (column.values.size() != n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "column '", column.name, "' has ", column.values.size(),
          " values, expected ", n));
    }
    for (size_t i = 0; i < column.values.size(); ++i) {
      const double v = column.values[i];
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i + 1, ", column '", column.name,
                         "': missing or non-finite value"));
      }
      if (!column.is_numeric() &&
          (v != std::floor(v) || v < 0 ||
           v >= static_cast<double>(column.levels.size()))) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i + 1, ", column '", column.name,
                         "': invalid level index ", v));
      }
    }
  }
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset '", name, "' has n < 2 records (n = ", n, ")"));
  }
  return Dataset(std::move(name), std::move(columns), static_cast<int>(n));
}

std::optional<int> Dataset::FindColumn(absl::string_view name) const {
  for (int j = 0; j < num_attributes(); ++j) {
    if (columns_[j].name == name) return j;
  }
  return std::nullopt;
}

std::vector<std::string> Dataset::ColumnNames() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const AttributeColumn& column : columns_) names.push_back(column.name);
  return names;
}

Dataset Dataset::WithColumnValues(int j, std::vector<double> values) const {
  Dataset copy = *this;
  copy.columns_[j].values = std::move(values);
  return copy;
}

bool operator==(const Dataset& a, const Dataset& b) {
  if (a.num_records_ != b.num_records_ ||
      a.columns_.size() != b.columns_.size()) {
    return false;
  }
  for (size_t j = 0; j < a.columns_.size(); ++j) {
    const AttributeColumn& ca = a.columns_[j];
    const AttributeColumn& cb = b.columns_[j];
    if (ca.name != cb.name || ca.values != cb.values ||
        ca.levels != cb.levels) {
      return false;
    }
  }
  return true;
}

Ranking RankAttribute(const AttributeColumn& column, RankDirection direction) {
  const int n = static_cast<int>(column.values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::vector<double>& v = column.values;
  if (direction == RankDirection::kDescending) {
    std::stable_sort(order.begin(), order.end(),
                     [&v](int a, int b) { return v[a] > v[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&v](int a, int b) { return v[a] < v[b]; });
  }

  Ranking ranking;
  ranking.attribute = column.name;
  ranking.direction = direction;
  ranking.ranks.resize(n);
  for (int k = 0; k < n; ++k) ranking.ranks[order[k]] = k + 1;

  for (int k = 1; k < n;) {
    if (v[order[k]] == v[order[k - 1]]) {
      ++ranking.tie_events;
      while (k < n && v[order[k]] == v[order[k - 1]]) ++k;
    } else {
      ++k;
    }
  }
  return ranking;
}

absl::StatusOr<PairedDatasets> Pair(Dataset original, Dataset masked) {
  if (original.num_records() != masked.num_records() ||
      original.num_attributes() != masked.num_attributes()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shape mismatch: original is ", original.num_records(), "x",
        original.num_attributes(), ", masked is ", masked.num_records(), "x",
        masked.num_attributes()));
  }
  for (int j = 0; j < original.num_attributes(); ++j) {
    const AttributeColumn& a = original.column(j);
    const AttributeColumn& b = masked.column(j);
    if (a.name != b.name) {
      return absl::InvalidArgumentError(
          absl::StrCat("column-name mismatch at position ", j + 1, ": '",
                       a.name, "' vs '", b.name, "'"));
    }
    if (a.levels != b.levels) {
      return absl::InvalidArgumentError(absl::StrCat(
          "column '", a.name, "' has different types or level orders"));
    }
  }
  return PairedDatasets{std::move(original), std::move(masked)};
}

namespace {

std::vector<std::string> SplitFields(absl::string_view line) {
  std::vector<std::string> fields = absl::StrSplit(line, ',');
  for (std::string& field : fields) {
    absl::StripAsciiWhitespace(&field);
  }
  return fields;
}

absl::StatusOr<double> ParseNumber(absl::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end ||
      !std::isfinite(value)) {
    return absl::InvalidArgumentError("not a finite number");
  }
  return value;
}

}  // namespace

absl::StatusOr<Dataset> LoadDataset(std::istream& in, std::string name) {
  constexpr absl::string_view kOrderedPrefix = "#ordered:";
  std::vector<std::pair<std::string, std::vector<std::string>>> ordered;
  std::vector<std::string> header;
  std::vector<AttributeColumn> columns;
  std::string line;
  int line_number = 0;
  int data_rows = 0;

  while (std::getline(in, line)) {
    ++line_number;
    absl::string_view view = line;
    absl::ConsumeSuffix(&view, "\r");
    view = absl::StripAsciiWhitespace(view);
    if (view.empty()) continue;

    if (view.front() == '#') {
      if (absl::StartsWith(view, kOrderedPrefix)) {
        if (!header.empty()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "line ", line_number, ": metadata must precede the header"));
        }
        view.remove_prefix(kOrderedPrefix.size());
        std::vector<std::string> kv = absl::StrSplit(view, absl::MaxSplits('=', 1));
        if (kv.size() != 2) {
          return absl::InvalidArgumentError(absl::StrCat(
              "line ", line_number, ": expected '#ordered:col=a<b<c'"));
        }
        std::string column_name(absl::StripAsciiWhitespace(kv[0]));
        std::vector<std::string> levels = absl::StrSplit(kv[1], '<');
        std::set<std::string> distinct;
        for (std::string& level : levels) {
          absl::StripAsciiWhitespace(&level);
          if (level.empty() || !distinct.insert(level).second) {
            return absl::InvalidArgumentError(
                absl::StrCat("line ", line_number, ": ordered levels for '",
                             column_name, "' must be non-empty and distinct"));
          }
        }
        ordered.emplace_back(std::move(column_name), std::move(levels));
      }
      continue;
    }

    std::vector<std::string> fields = SplitFields(view);
    if (header.empty()) {
      header = std::move(fields);
      for (const std::string& column_name : header) {
        AttributeColumn column;
        column.name = column_name;
        columns.push_back(std::move(column));
      }
      for (const auto& [column_name, levels] : ordered) {
        auto it = std::find(header.begin(), header.end(), column_name);
        if (it == header.end()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "ordered metadata names unknown column '", column_name, "'"));
        }
        columns[it - header.begin()].levels = levels;
      }
      continue;
    }

    ++data_rows;
    if (fields.size() != header.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", data_rows, " (line ", line_number, ") has ",
                       fields.size(), " fields, expected ", header.size()));
    }
    for (size_t j = 0; j < fields.size(); ++j) {
      AttributeColumn& column = columns[j];
      const std::string& cell = fields[j];
      if (cell.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", data_rows, ", column '", column.name,
                         "': missing value"));
      }
      if (column.is_numeric()) {
        absl::StatusOr<double> value = ParseNumber(cell);
        if (!value.ok()) {
          return absl::InvalidArgumentError(
              absl::StrCat("row ", data_rows, ", column '", column.name,
                           "': cannot parse '", cell, "' as a number"));
        }
        column.values.push_back(*value);
      } else {
        auto it = std::find(column.levels.begin(), column.levels.end(), cell);
        if (it == column.levels.end()) {
          return absl::InvalidArgumentError(
              absl::StrCat("row ", data_rows, ", column '", column.name,
                           "': '", cell, "' is not a declared level"));
        }
        column.values.push_back(
            static_cast<double>(it - column.levels.begin()));
      }
    }
  }

  if (header.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset '", name, "' has no header row"));
  }
  if (data_rows < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "dataset '", name, "' has n < 2 records (n = ", data_rows, ")"));
  }
  return Dataset::Create(std::move(name), std::move(columns));
}

absl::StatusOr<Dataset> LoadDatasetFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  return LoadDataset(in, path);
}

std::string FormatNumber(double value) {
  if (value == 0) value = 0;  // drop the sign of negative zero
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void WriteDataset(const Dataset& dataset, std::ostream& out) {
  for (const AttributeColumn& column : dataset.columns()) {
    if (!column.is_numeric()) {
      out << "#ordered:" << column.name << "="
          << absl::StrJoin(column.levels, "<") << "\n";
    }
  }
  out << absl::StrJoin(dataset.ColumnNames(), ",") << "\n";
  for (int i = 0; i < dataset.num_records(); ++i) {
    for (int j = 0; j < dataset.num_attributes(); ++j) {
      const AttributeColumn& column = dataset.column(j);
      if (j > 0) out << ",";
      if (column.is_numeric()) {
        out << FormatNumber(column.values[i]);
      } else {
        out << column.levels[static_cast<size_t>(column.values[i])];
      }
    }
    out << "\n";
  }
}

}  // namespace permaudit
