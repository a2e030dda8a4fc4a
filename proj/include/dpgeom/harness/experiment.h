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

#ifndef DPGEOM_HARNESS_EXPERIMENT_H_
#define DPGEOM_HARNESS_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpgeom/dp_sentence/logit_provider.h"
#include "dpgeom/dp_sentence/rewriters.h"
#include "dpgeom/dp_sentence/sampling.h"
#include "dpgeom/dp_word/embedding_table.h"
#include "dpgeom/geometry/intrinsic_dimension.h"
#include "dpgeom/geometry/point_cloud.h"
#include "dpgeom/harness/embedder.h"
#include "dpgeom/harness/sentence_pairs.h"

namespace dpgeom {

enum class Mechanism { kMadlib, kCausal, kMlm };

// "madlib", "causal", "mlm".
absl::string_view MechanismName(Mechanism mechanism);
absl::StatusOr<Mechanism> ParseMechanism(absl::string_view name);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct ExperimentConfig {
  std::vector<Mechanism> mechanisms = {Mechanism::kMadlib, Mechanism::kCausal,
                                       Mechanism::kMlm};
  std::vector<double> epsilons = {10, 15, 20, 25, 50, 100};
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  EstimatorConfig estimator;
  FilterConfig filter;
  ClipConfig clip = ClipConfig::Default();
  PromptTemplate prompt;
  // Causal generation cap; unset means max(2 * input length, 16).
  std::optional<std::size_t> max_len;
  // Concurrent rows. Does not affect results.
  std::size_t workers = 1;

  // Inputs. Relative paths in a config file are resolved against the file's
  // directory.
  std::string pairs_path;
  std::string embedding_table_path;
  std::string corpus_path;   // builds the bigram provider
  std::string provider_url;  // remote provider; overrides corpus_path
  std::optional<std::string> stop_token;
  double context_weight = 0.5;  // in-process embedder

  absl::Status Validate() const;

  // Every setting that can change results, in a fixed order.
  ConfigEcho Echo() const;
};

// What a run needs beyond its configuration. Pointers are borrowed.
struct ExperimentResources {
  const EmbeddingTable* table = nullptr;     // madlib
  const LogitProvider* provider = nullptr;   // causal and mlm
  const TextEmbedder* embedder = nullptr;    // always
};

struct ShiftRow {
  Mechanism mechanism = Mechanism::kMadlib;
  double epsilon = 0;
  std::size_t trial = 0;
  std::string sentence_id;
  double id_reference = 0;
  double id_transformed = 0;
  double shift = 0;  // id_transformed - id_reference
  // Per-token budget spends: perturbed words (madlib) or sampling draws.
  std::size_t privacy_steps = 0;
};

struct SkipRecord {
  Mechanism mechanism = Mechanism::kMadlib;
  double epsilon = 0;
  std::size_t trial = 0;
  std::string sentence_id;
  absl::Status reason;
};

struct GridResult {
  // Sorted by (mechanism name, epsilon, trial, sentence id).
  std::vector<ShiftRow> rows;
  std::vector<SkipRecord> skips;  // same order
};

// Seed for one row; a pure function of its arguments.
std::uint64_t RowSeed(std::uint64_t root, Mechanism mechanism, double epsilon,
                      std::size_t trial, absl::string_view sentence_id);

// Embeds `words` and estimates their intrinsic dimension. nullopt when the
// text fails the filter.
absl::StatusOr<std::optional<IdEstimate>> EstimateTextId(
    const TextEmbedder& embedder, absl::string_view id,
    std::span<const std::string> words, const FilterConfig& filter,
    const EstimatorConfig& estimator);

// Rewrites the reference of every pair under every mechanism, epsilon and
// trial. Row failures (filtered text, unknown words, provider errors,
// degenerate clouds) become skips; rows.size() + skips.size() always equals
// mechanisms * epsilons * trials * pairs. Fails only on an invalid
// configuration or a missing resource.
absl::StatusOr<GridResult> RunGrid(const ExperimentConfig& config,
                                   std::span<const SentencePair> pairs,
                                   const ExperimentResources& resources);

struct BaselineRow {
  std::string sentence_id;
  double id_reference = 0;
  double id_paraphrase = 0;
  double shift = 0;
};

struct BaselineStats {
  double mean = 0;
  double std = 0;  // population
  double mean_abs = 0;
  std::size_t count = 0;
  std::size_t skipped = 0;
};

struct BaselineResult {
  std::vector<BaselineRow> rows;
  BaselineStats stats;
};

// ID(paraphrase) - ID(reference) over pairs whose sides both pass the
// filter. Fails when no pair survives.
absl::StatusOr<BaselineResult> BaselineShift(
    std::span<const SentencePair> pairs, const TextEmbedder& embedder,
    const EstimatorConfig& estimator, const FilterConfig& filter);

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_EXPERIMENT_H_
