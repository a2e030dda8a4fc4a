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

// Word-level metric-DP rewriting (MADLIB).
//
// Each in-vocabulary word w is replaced by the vocabulary word nearest to
// phi(w) + z, where phi is the static embedding and z is drawn with density
// proportional to exp(-epsilon * |z|). Words are perturbed independently.

#ifndef DPGEOM_DP_WORD_MADLIB_H_
#define DPGEOM_DP_WORD_MADLIB_H_

#include <cstddef>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "dpgeom/common/privacy_budget.h"
#include "dpgeom/common/random.h"
#include "dpgeom/dp_word/embedding_table.h"

namespace dpgeom {

// Draws z in R^dim with density proportional to exp(-epsilon * |z|): a
// uniform direction on the unit sphere scaled by a Gamma(dim, 1/epsilon)
// radius. This is the sampling recipe of the original MADLIB construction.
Eigen::VectorXd SampleMetricNoise(std::size_t dim, PrivacyBudget budget,
                                  Rng& rng);

// Index of the vocabulary vector closest to `query` in Euclidean distance.
// Every word is a candidate, including the one being perturbed. Ties go to
// the lowest index.
absl::StatusOr<std::size_t> NearestToken(
    const Eigen::Ref<const Eigen::RowVectorXd>& query,
    const EmbeddingTable& table);

struct WordRewriteRecord {
  std::string original;
  std::string replacement;
  bool in_vocabulary = false;  // false: passed through unchanged
  bool self_substituted = false;
  double noise_norm = 0;
};

struct WordRewrite {
  std::vector<std::string> words;
  std::vector<WordRewriteRecord> records;
};

// Perturbs a single word. Out-of-vocabulary words pass through, consume no
// randomness and are flagged in the record.
WordRewriteRecord PerturbWord(absl::string_view word,
                              const EmbeddingTable& table,
                              PrivacyBudget budget, Rng& rng);

// Applies PerturbWord to each word in order with the shared generator.
// Output length always equals input length.
WordRewrite MadlibRewrite(std::span<const std::string> words,
                          const EmbeddingTable& table, PrivacyBudget budget,
                          Rng& rng);

}  // namespace dpgeom

#endif  // DPGEOM_DP_WORD_MADLIB_H_
