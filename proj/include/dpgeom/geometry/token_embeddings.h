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

// Token-embedding JSON-lines files, one record per text:
//
//   {"id": "...", "tokens": ["..."], "vectors": [[...], ...], "special": [...]}
//
// The vector dimension is constant within a file.

#ifndef DPGEOM_GEOMETRY_TOKEN_EMBEDDINGS_H_
#define DPGEOM_GEOMETRY_TOKEN_EMBEDDINGS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/geometry/point_cloud.h"

namespace dpgeom {

struct EmbeddedText {
  std::string id;
  std::vector<std::string> tokens;
  Matrix vectors;             // tokens.size() x D
  std::vector<bool> special;  // demarcation-token flags
};

absl::StatusOr<std::vector<EmbeddedText>> ReadTokenEmbeddings(
    std::istream& in);
absl::StatusOr<std::vector<EmbeddedText>> LoadTokenEmbeddings(
    const std::string& path);

// One JSON line, no trailing newline. Numbers are written with 17
// significant digits.
std::string ToJsonLine(const EmbeddedText& text);

absl::StatusOr<std::optional<PointCloud>> BuildPointCloud(
    const EmbeddedText& text, const FilterConfig& cfg);

}  // namespace dpgeom

#endif  // DPGEOM_GEOMETRY_TOKEN_EMBEDDINGS_H_
