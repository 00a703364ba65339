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

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "cli.h"
#include "permaudit/decomposition.h"
#include "permaudit/infoloss.h"
#include "permaudit/microdata.h"
#include "permaudit/permutation.h"
#include "permaudit/power_mean.h"
#include "permaudit/risk.h"
#include "permaudit/running_example.h"

namespace permaudit::cli {
namespace {

using Column = std::vector<std::string>;

void PrintTable(std::ostream& out, const std::string& title,
                const std::vector<std::string>& headers,
                const std::vector<Column>& columns) {
  out << title << "\n";
  std::vector<size_t> width(headers.size());
  for (size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const std::string& cell : columns[c]) {
      width[c] = std::max(width[c], cell.size());
    }
  }
  auto row = [&](auto cell_at) {
    std::string line = " ";
    for (size_t c = 0; c < headers.size(); ++c) {
      const std::string cell = cell_at(c);
      line += std::string(width[c] + 2 - cell.size(), ' ') + cell;
    }
    out << line << "\n";
  };
  row([&](size_t c) { return headers[c]; });
  for (size_t r = 0; r < columns.front().size(); ++r) {
    row([&](size_t c) { return columns[c][r]; });
  }
  out << "\n";
}

Column Numbers(const std::vector<double>& values) {
  Column out;
  for (double v : values) out.push_back(FormatNumber(v));
  return out;
}

Column Integers(const std::vector<int>& values) {
  Column out;
  for (int v : values) out.push_back(absl::StrCat(v));
  return out;
}

void PrintValuesWithRanks(std::ostream& out, const std::string& title,
                          const std::string& symbol, const Dataset& data,
                          const std::vector<Ranking>& ranks) {
  std::vector<std::string> headers = {"record"};
  std::vector<Column> columns = {Integers({1, 2, 3, 4, 5})};
  for (int j = 0; j < data.num_attributes(); ++j) {
    headers.push_back(absl::StrCat(symbol, "_", j + 1));
    columns.push_back(Numbers(data.column(j).values));
    headers.push_back(absl::StrCat(symbol, "_", j + 1, "R"));
    columns.push_back(Integers(ranks[j].ranks));
  }
  PrintTable(out, title, headers, columns);
}

std::string Vector(const std::vector<int>& values, bool epsilon_for_zero) {
  std::vector<std::string> cells;
  for (int v : values) {
    cells.push_back(epsilon_for_zero && v == 0 ? "ε" : absl::StrCat(v));
  }
  return absl::StrCat("(", absl::StrJoin(cells, ", "), ")");
}

}  // namespace

void PrintDemo(std::ostream& out) {
  const Dataset x = running_example::Original();
  const Dataset y = running_example::Masked();
  const Decomposition d = *ReverseMap(*Pair(x, y));
  const int p = x.num_attributes();

  out << "Five records, three attributes. Y was produced from X by adding "
         "noise;\nthe audit re-expresses it as Y = P X + E.\n\n";
  PrintValuesWithRanks(out, "Original data X (rank 1 = largest value)", "X",
                       x, d.original_ranks);
  PrintValuesWithRanks(out, "Masked data Y", "Y", y, d.masked_ranks);

  std::vector<std::string> headers = {"record"};
  std::vector<Column> columns = {Integers({1, 2, 3, 4, 5})};
  for (int j = 0; j < p; ++j) {
    headers.push_back(absl::StrCat("Z_", j + 1));
    columns.push_back(Numbers(d.reverse_mapped.column(j).values));
  }
  for (int j = 0; j < p; ++j) {
    headers.push_back(absl::StrCat("E_", j + 1));
    columns.push_back(Numbers(d.residuals[j]));
  }
  PrintTable(out,
             "Reverse-mapped Z (X's values in Y's rank order) and "
             "residuals E = Y - Z",
             headers, columns);

  for (int j = 0; j < p; ++j) {
    out << "P_" << j + 1 << " (sigma = "
        << absl::StrJoin(d.permutations[j].OneBasedImage(), " ") << ")\n";
    std::string matrix = ToMatrix(d.permutations[j]).ToString();
    for (absl::string_view line : absl::StrSplit(matrix, '\n')) {
      if (!line.empty()) out << "  " << line << "\n";
    }
  }
  out << "\n";

  out << "Rank displacements (zeros shown as ε)\n";
  for (int j = 0; j < p; ++j) {
    out << "  r_" << j + 1 << " = " << Vector(d.displacements[j].raw, true)
        << "\n";
  }
  out << "\n";

  out << "Disclosure risk (ε = " << kDefaultEpsilon << ")\n";
  for (int j = 0; j < p; ++j) {
    const DisplacementVector& r = d.displacements[j];
    out << "  attribute " << j + 1
        << ": T = " << TraceRatio(d.permutations[j])
        << "  D(1) = " << *AttributeRisk(r, 1)
        << "  D(-4) = " << *AttributeRisk(r, -4)
        << "  TD = " << *CombinedRisk(d.permutations[j], r) << "\n";
  }
  out << "\n";

  const RelativeDisplacement rel =
      *RelativeDisplacementOf(d.displacements[1], d.displacements[2]);
  out << "Information loss between attributes 2 and 3\n"
      << "  Δ(r_(2,3)) = " << Vector(rel.delta, false) << "\n"
      << "  I(1) = " << *PairInfoLoss(rel, 1)
      << "  I(4) = " << *PairInfoLoss(rel, 4)
      << "  I(+inf) = " << *PairInfoLoss(rel, kInfinity) << "\n";
}

}  // namespace permaudit::cli
