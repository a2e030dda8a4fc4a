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

#ifndef DPGEOM_HARNESS_TOY_WORLD_H_
#define DPGEOM_HARNESS_TOY_WORLD_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpgeom/dp_sentence/sampling.h"
#include "dpgeom/dp_word/embedding_table.h"
#include "dpgeom/harness/sentence_pairs.h"

namespace dpgeom {

// A small synthetic language. Words fall into classes; a sparse Markov chain
// over classes generates sentences, and word vectors cluster by class, so
// distributional neighbors are also embedding neighbors.
struct ToyWorldOptions {
  std::size_t classes = 10;          // <= 20
  std::size_t words_per_class = 12;  // <= 50
  std::size_t dim = 50;
  double class_spread = 0.12;  // per-coordinate std of class centers
  double word_spread = 0.06;  // per-coordinate std within a class
  std::size_t successors_per_class = 2;
  // Chance the next word is the current word's preferred member of the next
  // class rather than a uniform pick.
  double collocation = 0.9;
  std::size_t corpus_sentences = 2000;
  std::size_t min_length = 60;
  std::size_t max_length = 100;
  std::size_t pairs = 50;            // equivalent pairs
  std::size_t unrelated_pairs = 5;   // quality-0 rows
  double paraphrase_swap = 0.2;  // chance a word is swapped within its class
  std::uint64_t seed = 1;

  absl::Status Validate() const;
};

struct ToyWorld {
  std::shared_ptr<const EmbeddingTable> table;
  std::vector<std::vector<std::string>> corpus;
  // Equivalent pairs first, then the quality-0 rows.
  std::vector<SentencePair> pairs;
};

// Logit clip range for the bigram provider built over a default toy corpus.
// [0, 10] spans ln(count + 1) for next-token queries. Masked queries add two
// such terms and saturate at the upper bound for the strongest collocations.
ClipConfig ToyWorldClip();

absl::StatusOr<ToyWorld> MakeToyWorld(const ToyWorldOptions& options);

// Writes table.txt, corpus.txt, pairs.tsv and experiment.conf into `dir`,
// creating it if needed. The config points at the other three files.
absl::Status WriteToyWorld(const ToyWorld& world, const std::string& dir,
                           std::uint64_t experiment_seed);

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_TOY_WORLD_H_
