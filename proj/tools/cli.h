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

#ifndef DPGEOM_TOOLS_CLI_H_
#define DPGEOM_TOOLS_CLI_H_

#include <iosfwd>

#include "absl/status/status.h"

namespace dpgeom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitProvider = 3;

// Unavailable, DeadlineExceeded and DataLoss come from a logit provider;
// anything else is a data error.
int ExitCodeFor(const absl::Status& status);

// Entry point of the `dpgeom` tool. Results go to `out`, diagnostics to
// `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace dpgeom

#endif  // DPGEOM_TOOLS_CLI_H_
