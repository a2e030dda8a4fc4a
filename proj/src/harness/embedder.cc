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

#include "dpgeom/harness/embedder.h"

#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "dpgeom/common/random.h"

namespace dpgeom {

ContextualTableEmbedder::ContextualTableEmbedder(
    std::shared_ptr<const EmbeddingTable> table, double context_weight,
    bool demarcate)
    : table_(std::move(table)),
      context_weight_(context_weight),
      demarcate_(demarcate) {
  const Matrix& v = table_->vectors();
  const double mean = v.mean();
  oov_scale_ = std::sqrt((v.array() - mean).square().mean());
}

Eigen::RowVectorXd ContextualTableEmbedder::StaticVector(
    absl::string_view word) const {
  if (std::optional<std::size_t> index = table_->Find(word)) {
    return table_->vector(*index);
  }
  Rng rng(StableHasher().Add(absl::string_view("oov")).Add(word).Finish());
  std::normal_distribution<double> normal(0.0, oov_scale_);
  Eigen::RowVectorXd v(static_cast<Eigen::Index>(table_->dim()));
  for (Eigen::Index c = 0; c < v.size(); ++c) v[c] = normal(rng);
  return v;
}

absl::StatusOr<EmbeddedText> ContextualTableEmbedder::Embed(
    absl::string_view id, std::span<const std::string> words) const {
  const auto n = static_cast<Eigen::Index>(words.size());
  const auto d = static_cast<Eigen::Index>(table_->dim());
  Matrix base(n, d);
  for (Eigen::Index i = 0; i < n; ++i) base.row(i) = StaticVector(words[i]);

  EmbeddedText text;
  text.id = std::string(id);
  const Eigen::Index offset = demarcate_ ? 1 : 0;
  text.vectors.resize(n + 2 * offset, d);
  if (demarcate_) {
    text.tokens.push_back("[CLS]");
    text.special.push_back(true);
    text.vectors.row(0) = StaticVector("[CLS]");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::RowVectorXd context = Eigen::RowVectorXd::Zero(d);
    int neighbors = 0;
    if (i > 0) {
      context += base.row(i - 1);
      ++neighbors;
    }
    if (i + 1 < n) {
      context += base.row(i + 1);
      ++neighbors;
    }
    Eigen::RowVectorXd v = base.row(i);
    if (neighbors > 0) v += context_weight_ * context / neighbors;
    text.vectors.row(i + offset) = v;
    text.tokens.push_back(words[i]);
    text.special.push_back(false);
  }
  if (demarcate_) {
    text.tokens.push_back("[SEP]");
    text.special.push_back(true);
    text.vectors.row(n + 1) = StaticVector("[SEP]");
  }
  return text;
}

std::string ContextualTableEmbedder::Describe() const {
  return absl::StrFormat("contextual-table(dim=%d,vocab=%d,context_weight=%g)",
                         table_->dim(), table_->size(), context_weight_);
}

absl::StatusOr<std::unique_ptr<PrecomputedEmbedder>>
PrecomputedEmbedder::Create(std::vector<EmbeddedText> texts,
                            std::string source) {
  std::unique_ptr<PrecomputedEmbedder> embedder(new PrecomputedEmbedder());
  embedder->source_ = std::move(source);
  for (EmbeddedText& text : texts) {
    std::string key = text.id;
    if (!embedder->texts_.emplace(std::move(key), std::move(text)).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate text id '", text.id, "' in embeddings"));
    }
  }
  return embedder;
}

absl::StatusOr<EmbeddedText> PrecomputedEmbedder::Embed(
    absl::string_view id, std::span<const std::string>) const {
  auto it = texts_.find(id);
  if (it == texts_.end()) {
    return absl::NotFoundError(
        absl::StrCat("no precomputed embeddings for text '", id, "'"));
  }
  return it->second;
}

std::string PrecomputedEmbedder::Describe() const {
  return absl::StrCat("precomputed(", source_, ")");
}

}  // namespace dpgeom
