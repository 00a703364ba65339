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

#ifndef PERMAUDIT_TOOLS_PERMAUDIT_OUTPUT_FILES_H_
#define PERMAUDIT_TOOLS_PERMAUDIT_OUTPUT_FILES_H_

#include <string>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace permaudit::cli {

// Writes `contents` to a temporary file next to `path` and renames it into
// place, so readers never observe a partially written file.
absl::Status WriteFileAtomically(const std::string& path,
                                 absl::string_view contents);

// Creates `dir` (and parents) if it does not exist.
absl::Status EnsureDirectory(const std::string& dir);

}  // namespace permaudit::cli

#endif  // PERMAUDIT_TOOLS_PERMAUDIT_OUTPUT_FILES_H_
