// Copyright 2026 The dpgeom Authors
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

#ifndef DPGEOM_COMMON_STATUS_MACROS_H_
#define DPGEOM_COMMON_STATUS_MACROS_H_

#include "absl/strings/string_view.h"
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

#define DPGEOM_STATUS_CONCAT_INNER_(x, y) x##y
#define DPGEOM_STATUS_CONCAT_(x, y) DPGEOM_STATUS_CONCAT_INNER_(x, y)

#define RETURN_IF_ERROR(expr)                     \
  do {                                            \
    const ::absl::Status _dpgeom_status = (expr); \
    if (!_dpgeom_status.ok()) {                   \
      return _dpgeom_status;                      \
    }                                             \
  } while (0)

#define ASSIGN_OR_RETURN(lhs, rexpr)                                        \
  ASSIGN_OR_RETURN_IMPL_(DPGEOM_STATUS_CONCAT_(_dpgeom_statusor, __LINE__), \
                         lhs, rexpr)

#define ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                           \
  if (!statusor.ok()) {                              \
    return statusor.status();                        \
  }                                                  \
  lhs = std::move(statusor).value()

namespace dpgeom {

// Returns `status` with `context` prepended to its message, keeping the code.
inline absl::Status WithContext(const absl::Status& status,
                                absl::string_view context) {
  if (status.ok()) return status;
  return absl::Status(status.code(),
                      absl::StrCat(context, ": ", status.message()));
}

}  // namespace dpgeom

#endif  // DPGEOM_COMMON_STATUS_MACROS_H_
