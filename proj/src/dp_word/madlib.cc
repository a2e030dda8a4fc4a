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

#include "dpgeom/dp_word/madlib.h"

#include <limits>

#include "absl/strings/str_cat.h"

namespace dpgeom {

absl::StatusOr<std::size_t> NearestToken(
    const Eigen::Ref<const Eigen::RowVectorXd>& query,
    const EmbeddingTable& table) {
  if (static_cast<std::size_t>(query.size()) != table.dim()) {
    return absl::InvalidArgumentError(
        absl::StrCat("query has dimension ", query.size(), ", table has ",
                     table.dim()));
  }
  const Matrix& vectors = table.vectors();
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
    const double dist = (vectors.row(r) - query).squaredNorm();
    if (dist < best_dist) {
      best_dist = dist;
      best = static_cast<std::size_t>(r);
    }
  }
  return best;
}

WordRewriteRecord PerturbWord(absl::string_view word,
                              const EmbeddingTable& table,
                              PrivacyBudget budget, Rng& rng) {
  WordRewriteRecord record;
  record.original = std::string(word);
  const std::optional<std::size_t> index = table.Find(word);
  if (!index.has_value()) {
    record.replacement = record.original;
    record.self_substituted = true;
    return record;
  }
  const Eigen::VectorXd noise = SampleMetricNoise(table.dim(), budget, rng);
  const Eigen::RowVectorXd query = table.vector(*index) + noise.transpose();
  // Dimensions agree by construction.
  const std::size_t nearest = *NearestToken(query, table);
  record.replacement = table.token(nearest);
  record.in_vocabulary = true;
  record.self_substituted = nearest == *index;
  record.noise_norm = noise.norm();
  return record;
}

WordRewrite MadlibRewrite(std::span<const std::string> words,
                          const EmbeddingTable& table, PrivacyBudget budget,
                          Rng& rng) {
  WordRewrite out;
  out.words.reserve(words.size());
  out.records.reserve(words.size());
  for (const std::string& word : words) {
    WordRewriteRecord record = PerturbWord(word, table, budget, rng);
    out.words.push_back(record.replacement);
    out.records.push_back(std::move(record));
  }
  return out;
}

}  // namespace dpgeom
