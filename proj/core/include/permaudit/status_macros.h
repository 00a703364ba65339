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

#ifndef PERMAUDIT_STATUS_MACROS_H_
#define PERMAUDIT_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define PERMAUDIT_CONCAT_INNER_(a, b) a##b
#define PERMAUDIT_CONCAT_(a, b) PERMAUDIT_CONCAT_INNER_(a, b)

// Returns early from the enclosing function if `expr` is not OK.
#define PERMAUDIT_RETURN_IF_ERROR(expr)              \
  do {                                               \
    ::absl::Status permaudit_status_ = (expr);       \
    if (!permaudit_status_.ok()) {                   \
      return permaudit_status_;                      \
    }                                                \
  } while (false)

#define PERMAUDIT_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                     \
  if (!tmp.ok()) {                                        \
    return std::move(tmp).status();                       \
  }                                                       \
  lhs = std::move(tmp).value()

// Evaluates a StatusOr expression, assigning the value to `lhs` on success
// and propagating the status otherwise.
#define PERMAUDIT_ASSIGN_OR_RETURN(lhs, rexpr)                              \
  PERMAUDIT_ASSIGN_OR_RETURN_IMPL_(                                         \
      PERMAUDIT_CONCAT_(permaudit_statusor_, __LINE__), lhs, rexpr)

#endif  // PERMAUDIT_STATUS_MACROS_H_
