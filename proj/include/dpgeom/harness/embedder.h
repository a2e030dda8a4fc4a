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

#ifndef DPGEOM_HARNESS_EMBEDDER_H_
#define DPGEOM_HARNESS_EMBEDDER_H_

#include <memory>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "dpgeom/dp_word/embedding_table.h"
#include "dpgeom/geometry/token_embeddings.h"

namespace dpgeom {

// Turns a tokenized text into per-token vectors. Implementations must be
// safe for concurrent calls.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;

  virtual absl::StatusOr<EmbeddedText> Embed(
      absl::string_view id, std::span<const std::string> words) const = 0;

  // Recorded in run metadata.
  virtual std::string Describe() const = 0;
};

// In-process contextual embedder over a static table:
//
//   v_i = phi(w_i) + context_weight * mean(phi(w_{i-1}), phi(w_{i+1}))
//
// using whichever neighbors exist. Words missing from the table get a fixed
// pseudo-random vector derived from the word itself, with the table's
// per-coordinate spread. With `demarcate` set, "[CLS]" and "[SEP]" rows
// flagged as special are added at both ends.
class ContextualTableEmbedder : public TextEmbedder {
 public:
  ContextualTableEmbedder(std::shared_ptr<const EmbeddingTable> table,
                          double context_weight, bool demarcate = true);

  absl::StatusOr<EmbeddedText> Embed(
      absl::string_view id, std::span<const std::string> words) const override;
  std::string Describe() const override;

  Eigen::RowVectorXd StaticVector(absl::string_view word) const;

 private:
  std::shared_ptr<const EmbeddingTable> table_;
  double context_weight_;
  bool demarcate_;
  double oov_scale_;
};

// Serves vectors computed elsewhere (for example by the model bridge), keyed
// by text id. The words passed to Embed are ignored.
class PrecomputedEmbedder : public TextEmbedder {
 public:
  static absl::StatusOr<std::unique_ptr<PrecomputedEmbedder>> Create(
      std::vector<EmbeddedText> texts, std::string source = "");

  absl::StatusOr<EmbeddedText> Embed(
      absl::string_view id, std::span<const std::string> words) const override;
  std::string Describe() const override;

 private:
  PrecomputedEmbedder() = default;

  std::string source_;
  absl::flat_hash_map<std::string, EmbeddedText> texts_;
};

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_EMBEDDER_H_
