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

#include "dpgeom/harness/toy_world.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "dpgeom/common/random.h"
#include "dpgeom/common/status_macros.h"

namespace dpgeom {
namespace {

constexpr absl::string_view kConsonants = "bdfgklmnprstvz";
constexpr absl::string_view kVowels = "aeiou";

std::string Syllable(std::size_t i) {
  return {kConsonants[(i / kVowels.size()) % kConsonants.size()],
          kVowels[i % kVowels.size()]};
}

// Class c, member j. The first syllable names the class.
std::string WordName(std::size_t c, std::size_t j) {
  return absl::StrCat(Syllable(c), Syllable(20 + j));
}

class Chain {
 public:
  Chain(const ToyWorldOptions& o, Rng& rng) : o_(o) {
    successors_.resize(o.classes);
    weights_.resize(o.classes);
    std::uniform_real_distribution<double> weight(1.0, 2.0);
    for (std::size_t c = 0; c < o.classes; ++c) {
      std::vector<std::size_t> others;
      for (std::size_t d = 0; d < o.classes; ++d) {
        if (d != c) others.push_back(d);
      }
      std::shuffle(others.begin(), others.end(), rng);
      others.resize(std::min(o.successors_per_class, others.size()));
      std::sort(others.begin(), others.end());
      successors_[c] = others;
      for (std::size_t i = 0; i < others.size(); ++i) {
        weights_[c].push_back(weight(rng));
      }
    }
    std::uniform_int_distribution<std::size_t> member(0,
                                                      o.words_per_class - 1);
    preferred_.resize(o.classes * o.words_per_class);
    for (auto& row : preferred_) {
      row.resize(o.classes);
      for (std::size_t& p : row) p = member(rng);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> Sentence(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> length(o_.min_length,
                                                      o_.max_length);
    std::uniform_int_distribution<std::size_t> start(0, o_.classes - 1);
    std::uniform_int_distribution<std::size_t> member(0,
                                                      o_.words_per_class - 1);
    const std::size_t n = length(rng);
    std::bernoulli_distribution collocate(o_.collocation);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t c = start(rng);
    std::size_t j = member(rng);
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(c, j);
      std::discrete_distribution<std::size_t> next(weights_[c].begin(),
                                                   weights_[c].end());
      const std::size_t next_class = successors_[c][next(rng)];
      j = collocate(rng) ? preferred_[c * o_.words_per_class + j][next_class]
                         : member(rng);
      c = next_class;
    }
    return out;
  }

 private:
  const ToyWorldOptions& o_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::vector<double>> weights_;
  // (class * words_per_class + member) -> preferred member per next class.
  std::vector<std::vector<std::size_t>> preferred_;
};

std::vector<std::string> Words(
    const std::vector<std::pair<std::size_t, std::size_t>>& sentence) {
  std::vector<std::string> words;
  for (const auto& [c, j] : sentence) words.push_back(WordName(c, j));
  return words;
}

Rng Stream(std::uint64_t seed, absl::string_view name) {
  return Rng(StableHasher().Add(seed).Add(name).Finish());
}

}  // namespace

absl::Status ToyWorldOptions::Validate() const {
  if (classes < 2 || classes > 20) {
    return absl::InvalidArgumentError("classes must be in [2, 20]");
  }
  if (words_per_class < 2 || words_per_class > 50) {
    return absl::InvalidArgumentError("words_per_class must be in [2, 50]");
  }
  if (dim < 1) return absl::InvalidArgumentError("dim must be >= 1");
  if (!(class_spread >= 0) || !(word_spread > 0)) {
    return absl::InvalidArgumentError(
        "class_spread must be >= 0 and word_spread > 0");
  }
  if (successors_per_class < 1) {
    return absl::InvalidArgumentError("successors_per_class must be >= 1");
  }
  if (min_length < 1 || min_length > max_length) {
    return absl::InvalidArgumentError("need 1 <= min_length <= max_length");
  }
  if (corpus_sentences < 1) {
    return absl::InvalidArgumentError("corpus_sentences must be >= 1");
  }
  if (!(collocation >= 0 && collocation <= 1)) {
    return absl::InvalidArgumentError("collocation must be in [0, 1]");
  }
  if (!(paraphrase_swap >= 0 && paraphrase_swap <= 1)) {
    return absl::InvalidArgumentError("paraphrase_swap must be in [0, 1]");
  }
  return absl::OkStatus();
}

ClipConfig ToyWorldClip() { return ClipConfig::Create(0.0, 10.0).value(); }

absl::StatusOr<ToyWorld> MakeToyWorld(const ToyWorldOptions& o) {
  RETURN_IF_ERROR(o.Validate());
  ToyWorld world;

  Rng table_rng = Stream(o.seed, "table");
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto dim = static_cast<Eigen::Index>(o.dim);
  Matrix vectors(static_cast<Eigen::Index>(o.classes * o.words_per_class), dim);
  std::vector<std::string> tokens;
  for (std::size_t c = 0; c < o.classes; ++c) {
    Eigen::RowVectorXd center(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      center[k] = o.class_spread * normal(table_rng);
    }
    for (std::size_t j = 0; j < o.words_per_class; ++j) {
      const auto row = static_cast<Eigen::Index>(tokens.size());
      for (Eigen::Index k = 0; k < dim; ++k) {
        vectors(row, k) = center[k] + o.word_spread * normal(table_rng);
      }
      tokens.push_back(WordName(c, j));
    }
  }
  ASSIGN_OR_RETURN(EmbeddingTable table,
                   EmbeddingTable::Create(std::move(tokens), std::move(vectors)));
  world.table = std::make_shared<const EmbeddingTable>(std::move(table));

  Rng chain_rng = Stream(o.seed, "chain");
  const Chain chain(o, chain_rng);

  Rng corpus_rng = Stream(o.seed, "corpus");
  for (std::size_t s = 0; s < o.corpus_sentences; ++s) {
    world.corpus.push_back(Words(chain.Sentence(corpus_rng)));
  }

  Rng pair_rng = Stream(o.seed, "pairs");
  std::bernoulli_distribution swap(o.paraphrase_swap);
  std::uniform_int_distribution<std::size_t> other(1, o.words_per_class - 1);
  std::size_t next_id = 100000;
  for (std::size_t i = 0; i < o.pairs; ++i) {
    auto sentence = chain.Sentence(pair_rng);
    auto paraphrase = sentence;
    for (auto& [c, j] : paraphrase) {
      if (swap(pair_rng)) j = (j + other(pair_rng)) % o.words_per_class;
    }
    SentencePair pair;
    pair.id = absl::StrCat(next_id++);
    pair.paraphrase_id = absl::StrCat(next_id++);
    pair.reference = absl::StrJoin(Words(sentence), " ");
    pair.paraphrase = absl::StrJoin(Words(paraphrase), " ");
    pair.equivalent = true;
    world.pairs.push_back(std::move(pair));
  }
  for (std::size_t i = 0; i < o.unrelated_pairs; ++i) {
    SentencePair pair;
    pair.id = absl::StrCat(next_id++);
    pair.paraphrase_id = absl::StrCat(next_id++);
    pair.reference = absl::StrJoin(Words(chain.Sentence(pair_rng)), " ");
    pair.paraphrase = absl::StrJoin(Words(chain.Sentence(pair_rng)), " ");
    pair.equivalent = false;
    world.pairs.push_back(std::move(pair));
  }
  return world;
}

absl::Status WriteToyWorld(const ToyWorld& world, const std::string& dir,
                           std::uint64_t experiment_seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  const std::filesystem::path base(dir);
  auto write = [&](absl::string_view name,
                   const auto& body) -> absl::Status {
    const std::string path = (base / std::string(name)).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot open ", path, " for writing"));
    }
    body(out);
    out.close();
    if (!out) return absl::InternalError(absl::StrCat("failed writing ", path));
    return absl::OkStatus();
  };
  RETURN_IF_ERROR(write("table.txt", [&](std::ostream& out) {
    WriteEmbeddingTable(*world.table, out);
  }));
  RETURN_IF_ERROR(write("corpus.txt", [&](std::ostream& out) {
    for (const auto& sentence : world.corpus) {
      out << absl::StrJoin(sentence, " ") << '\n';
    }
  }));
  RETURN_IF_ERROR(write("pairs.tsv", [&](std::ostream& out) {
    WritePairs(world.pairs, out);
  }));
  return write("experiment.conf", [&](std::ostream& out) {
    out << "# Toy pipeline: bigram provider over corpus.txt, in-process\n"
           "# contextual embedder over table.txt.\n"
        << "pairs = pairs.tsv\n"
        << "embedding_table = table.txt\n"
        << "corpus = corpus.txt\n"
        << "mechanisms = madlib,causal,mlm\n"
        << "epsilons = 10,15,20,25,50,100\n"
        << "trials = 3\n"
        << "seed = " << experiment_seed << '\n'
        << "estimator = twonn\n"
        << "# Covers the bigram provider's logit range.\n"
        << "clip_lo = " << ToyWorldClip().lo() << '\n'
        << "clip_hi = " << ToyWorldClip().hi() << '\n';
  });
}

}  // namespace dpgeom
