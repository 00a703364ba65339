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

// Microdata ingestion, validation and ranking.
//
// A Dataset is an n x p table of ordinal-comparable values. Numeric
// attributes hold real numbers; ordered categorical attributes hold the
// zero-based index of their level, with the level names kept alongside so
// that ordering and round-tripping through text both work.

#ifndef PERMAUDIT_MICRODATA_H_
#define PERMAUDIT_MICRODATA_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace permaudit {

enum class RankDirection {
  kDescending,  // rank 1 = largest value
  kAscending,   // rank 1 = smallest value
};

absl::string_view RankDirectionName(RankDirection direction);
absl::StatusOr<RankDirection> ParseRankDirection(absl::string_view text);

struct AttributeColumn {
  std::string name;
  std::vector<double> values;
  // Level names in increasing order. Empty for numeric attributes.
  std::vector<std::string> levels;

  bool is_numeric() const { return levels.empty(); }
};

class Dataset {
 public:
  // Validates that every column has the same length n >= 2, that column
  // names are unique and non-empty, that values are finite, and that
  // categorical values are valid level indices.
  static absl::StatusOr<Dataset> Create(std::string name,
                                        std::vector<AttributeColumn> columns);

  const std::string& name() const { return name_; }
  int num_records() const { return num_records_; }
  int num_attributes() const { return static_cast<int>(columns_.size()); }

  const std::vector<AttributeColumn>& columns() const { return columns_; }
  const AttributeColumn& column(int j) const { return columns_[j]; }

  std::optional<int> FindColumn(absl::string_view name) const;
  std::vector<std::string> ColumnNames() const;

  // Returns a copy with column `j` replaced by `values`. The caller is
  // responsible for keeping the values valid for the column's type.
  Dataset WithColumnValues(int j, std::vector<double> values) const;

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  Dataset(std::string name, std::vector<AttributeColumn> columns,
          int num_records)
      : name_(std::move(name)),
        columns_(std::move(columns)),
        num_records_(num_records) {}

  std::string name_;
  std::vector<AttributeColumn> columns_;
  int num_records_ = 0;
};

// Ordinal ranks of one attribute. `ranks[i]` is the 1-based rank of row i.
struct Ranking {
  std::string attribute;
  std::vector<int> ranks;
  RankDirection direction = RankDirection::kDescending;
  // Number of groups of two or more equal values that had to be broken.
  int tie_events = 0;

  int size() const { return static_cast<int>(ranks.size()); }
};

// Ranks a column. Ties are broken by ascending row index: the earlier row
// gets the better (smaller) rank, so the result is always a bijection onto
// {1..n}.
Ranking RankAttribute(const AttributeColumn& column, RankDirection direction);

struct PairedDatasets {
  Dataset original;
  Dataset masked;
};

// Checks that `masked` has the same shape, column names (in order) and
// column types as `original`.
absl::StatusOr<PairedDatasets> Pair(Dataset original, Dataset masked);

// Parses comma-separated text: optional "#ordered:col=a<b<c" metadata lines,
// then a header row, then one row per record. Other lines starting with '#'
// and blank lines are ignored.
absl::StatusOr<Dataset> LoadDataset(std::istream& in, std::string name);
absl::StatusOr<Dataset> LoadDatasetFile(const std::string& path);

// Writes `dataset` in the format accepted by LoadDataset. Numbers use the
// shortest representation that round-trips.
void WriteDataset(const Dataset& dataset, std::ostream& out);

// Shortest round-trip decimal representation of `value`.
std::string FormatNumber(double value);

}  // namespace permaudit

#endif  // PERMAUDIT_MICRODATA_H_
