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

#ifndef DPGEOM_DP_WORD_EMBEDDING_TABLE_H_
#define DPGEOM_DP_WORD_EMBEDDING_TABLE_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "dpgeom/geometry/point_cloud.h"

namespace dpgeom {

// Static word vectors. Immutable once built, so one table can be shared by
// any number of concurrent rewriters.
class EmbeddingTable {
 public:
  // Requires V >= 2 unique tokens, one finite row per token.
  static absl::StatusOr<EmbeddingTable> Create(std::vector<std::string> tokens,
                                               Matrix vectors);

  std::size_t size() const { return tokens_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(vectors_.cols()); }
  const std::string& token(std::size_t index) const { return tokens_[index]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const Matrix& vectors() const { return vectors_; }
  auto vector(std::size_t index) const {
    return vectors_.row(static_cast<Eigen::Index>(index));
  }

  std::optional<std::size_t> Find(absl::string_view token) const;

 private:
  EmbeddingTable(std::vector<std::string> tokens, Matrix vectors,
                 absl::flat_hash_map<std::string, std::size_t> index)
      : tokens_(std::move(tokens)),
        vectors_(std::move(vectors)),
        index_(std::move(index)) {}

  std::vector<std::string> tokens_;
  Matrix vectors_;
  absl::flat_hash_map<std::string, std::size_t> index_;
};

// Reads the whitespace-separated text format used by the common public word
// vector releases: one `token v1 ... vd` line per word. A leading
// `<count> <dim>` header line, as written by word2vec tools, is skipped when
// present.
absl::StatusOr<EmbeddingTable> ReadEmbeddingTable(std::istream& in);
absl::StatusOr<EmbeddingTable> LoadEmbeddingTable(const std::string& path);

void WriteEmbeddingTable(const EmbeddingTable& table, std::ostream& out);

}  // namespace dpgeom

#endif  // DPGEOM_DP_WORD_EMBEDDING_TABLE_H_
