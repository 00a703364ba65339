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

#include "permaudit/decomposition.h"

#include <optional>
#include <ostream>

#include "absl/status/status.h"
#include "absl/strings/str_join.h"
#include "permaudit/parallel.h"

namespace permaudit {

int Decomposition::TieEvents() const {
  int total = 0;
  for (const Ranking& r : original_ranks) total += r.tie_events;
  for (const Ranking& r : masked_ranks) total += r.tie_events;
  return total;
}

std::vector<NamedPermutation> Decomposition::NamedPermutations() const {
  std::vector<NamedPermutation> out;
  for (size_t j = 0; j < permutations.size(); ++j) {
    out.push_back({displacements[j].attribute, permutations[j]});
  }
  return out;
}

absl::StatusOr<Decomposition> ReverseMap(const PairedDatasets& pair,
                                         const ReverseMapOptions& options) {
  const Dataset& x = pair.original;
  const Dataset& y = pair.masked;
  const int p = x.num_attributes();

  struct Column {
    Ranking original_rank;
    Ranking masked_rank;
    std::optional<Permutation> permutation;
    std::vector<double> z;
    std::vector<double> e;
    absl::Status status;
  };
  std::vector<Column> columns(p);

  ParallelFor(p, options.num_threads, [&](int j) {
    Column& c = columns[j];
    const AttributeColumn& xj = x.column(j);
    const AttributeColumn& yj = y.column(j);
    c.original_rank = RankAttribute(xj, options.direction);
    c.masked_rank = RankAttribute(yj, options.direction);
    absl::StatusOr<Permutation> perm =
        ExtractPermutation(c.original_rank, c.masked_rank);
    if (!perm.ok()) {
      c.status = perm.status();
      return;
    }
    c.z = perm->Apply(xj.values);
    c.e.resize(c.z.size());
    for (size_t i = 0; i < c.z.size(); ++i) {
      c.e[i] = xj.is_numeric() ? yj.values[i] - c.z[i]
                               : (yj.values[i] == c.z[i] ? 0.0 : 1.0);
    }
    c.permutation = *std::move(perm);
  });

  std::vector<AttributeColumn> z_columns;
  Decomposition out{x, {}, {}, {}, {}, {}};
  for (int j = 0; j < p; ++j) {
    Column& c = columns[j];
    if (!c.status.ok()) return c.status;
    AttributeColumn zj = x.column(j);
    zj.values = std::move(c.z);
    z_columns.push_back(std::move(zj));
    out.residuals.push_back(std::move(c.e));
    out.displacements.push_back(Displacement(*c.permutation, x.column(j).name));
    out.permutations.push_back(*std::move(c.permutation));
    out.original_ranks.push_back(std::move(c.original_rank));
    out.masked_ranks.push_back(std::move(c.masked_rank));
  }
  absl::StatusOr<Dataset> z =
      Dataset::Create(x.name() + " (reverse mapped)", std::move(z_columns));
  if (!z.ok()) return z.status();
  out.reverse_mapped = *std::move(z);
  return out;
}

void WriteResiduals(const Decomposition& decomposition, std::ostream& out) {
  const Dataset& z = decomposition.reverse_mapped;
  out << absl::StrJoin(z.ColumnNames(), ",") << "\n";
  for (int i = 0; i < z.num_records(); ++i) {
    for (int j = 0; j < z.num_attributes(); ++j) {
      if (j > 0) out << ",";
      const double e = decomposition.residuals[j][i];
      if (z.column(j).is_numeric()) {
        out << FormatNumber(e);
      } else {
        out << (e == 0 ? "same" : "different");
      }
    }
    out << "\n";
  }
}

}  // namespace permaudit
