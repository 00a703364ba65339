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

#ifndef PERMAUDIT_TOOLS_PERMAUDIT_CLI_H_
#define PERMAUDIT_TOOLS_PERMAUDIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace permaudit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInfeasible = 3,
};

// Runs one command line. `args[0]` is the program name. Reports and
// summaries go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Prints the bundled five-record example end to end.
void PrintDemo(std::ostream& out);

}  // namespace permaudit::cli

#endif  // PERMAUDIT_TOOLS_PERMAUDIT_CLI_H_
