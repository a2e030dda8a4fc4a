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

#ifndef DPGEOM_HARNESS_CONFIG_FILE_H_
#define DPGEOM_HARNESS_CONFIG_FILE_H_

#include <cstddef>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpgeom/harness/experiment.h"

namespace dpgeom {

struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// One `key = value` per line. `#` starts a comment line; blank lines are
// ignored; a value may be wrapped in double quotes to keep edge spaces.
absl::StatusOr<std::vector<ConfigEntry>> ParseConfig(absl::string_view text);
absl::StatusOr<std::vector<ConfigEntry>> LoadConfigFile(
    const std::string& path);

// Keys mirror ExperimentConfig::Echo(). Relative paths (pairs,
// embedding_table, corpus) are resolved against `base_dir` when it is
// non-empty. Unknown keys and bad values are errors naming the line.
absl::Status ApplyConfig(std::span<const ConfigEntry> entries,
                         const std::string& base_dir,
                         ExperimentConfig* config);

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_CONFIG_FILE_H_
