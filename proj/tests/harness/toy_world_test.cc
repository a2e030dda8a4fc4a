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

#include <set>
#include <string>

#include "absl/strings/str_split.h"
#include "dpgeom/dp_sentence/toy_bigram_provider.h"
#include "dpgeom/dp_word/word_tokenizer.h"
#include "dpgeom/harness/config_file.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::StatusIs;

TEST(ToyWorldTest, ShapesFollowOptions) {
  ToyWorldOptions o;
  o.corpus_sentences = 50;
  ASSERT_OK_AND_ASSIGN(ToyWorld world, MakeToyWorld(o));
  EXPECT_EQ(world.table->size(), o.classes * o.words_per_class);
  EXPECT_EQ(world.table->dim(), o.dim);
  EXPECT_EQ(world.corpus.size(), o.corpus_sentences);
  for (const auto& s : world.corpus) {
    EXPECT_GE(s.size(), o.min_length);
    EXPECT_LE(s.size(), o.max_length);
  }
  ASSERT_EQ(world.pairs.size(), o.pairs + o.unrelated_pairs);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < world.pairs.size(); ++i) {
    EXPECT_EQ(world.pairs[i].equivalent, i < o.pairs);
    EXPECT_TRUE(ids.insert(world.pairs[i].id).second);
    EXPECT_TRUE(ids.insert(world.pairs[i].paraphrase_id).second);
  }
}

TEST(ToyWorldTest, EveryWordIsInTheTable) {
  ToyWorldOptions o;
  o.corpus_sentences = 20;
  ASSERT_OK_AND_ASSIGN(ToyWorld world, MakeToyWorld(o));
  for (const auto& s : world.corpus) {
    for (const std::string& w : s) EXPECT_TRUE(world.table->Find(w)) << w;
  }
  for (const SentencePair& p : world.pairs) {
    for (const std::string& w : SplitWords(p.reference)) {
      EXPECT_TRUE(world.table->Find(w)) << w;
    }
  }
}

TEST(ToyWorldTest, ParaphrasesKeepLengthAndClassSequence) {
  ToyWorldOptions o;
  o.corpus_sentences = 1;
  ASSERT_OK_AND_ASSIGN(ToyWorld world, MakeToyWorld(o));
  std::size_t swapped = 0, total = 0;
  for (std::size_t i = 0; i < o.pairs; ++i) {
    const auto ref = SplitWords(world.pairs[i].reference);
    const auto para = SplitWords(world.pairs[i].paraphrase);
    ASSERT_EQ(ref.size(), para.size());
    for (std::size_t t = 0; t < ref.size(); ++t) {
      // The first two letters name the class.
      EXPECT_EQ(ref[t].substr(0, 2), para[t].substr(0, 2));
      swapped += ref[t] != para[t];
      ++total;
    }
  }
  const double rate = static_cast<double>(swapped) / total;
  EXPECT_NEAR(rate, o.paraphrase_swap, 0.03);
}

TEST(ToyWorldTest, SameSeedSameWorld) {
  ToyWorldOptions o;
  o.corpus_sentences = 30;
  ASSERT_OK_AND_ASSIGN(ToyWorld a, MakeToyWorld(o));
  ASSERT_OK_AND_ASSIGN(ToyWorld b, MakeToyWorld(o));
  EXPECT_EQ(a.corpus, b.corpus);
  EXPECT_EQ(a.table->vectors(), b.table->vectors());
  o.seed = 2;
  ASSERT_OK_AND_ASSIGN(ToyWorld c, MakeToyWorld(o));
  EXPECT_NE(a.corpus, c.corpus);
}

TEST(ToyWorldTest, ClipCoversNextTokenLogits) {
  ASSERT_OK_AND_ASSIGN(ToyWorld world, MakeToyWorld(ToyWorldOptions()));
  ASSERT_OK_AND_ASSIGN(auto provider, ToyBigramProvider::Create(world.corpus));
  const ClipConfig clip = ToyWorldClip();
  const auto v = static_cast<TokenId>(provider->vocab().size());
  double causal_max = 0, masked_max = 0;
  for (TokenId a = 0; a < v; ++a) {
    const std::vector<TokenId> context = {a};
    ASSERT_OK_AND_ASSIGN(auto next, provider->NextLogits(context));
    for (double x : next) causal_max = std::max(causal_max, x);
    const std::vector<TokenId> window = {a, 0, a};
    ASSERT_OK_AND_ASSIGN(auto masked, provider->MaskedLogits(window, 1));
    for (double x : masked) masked_max = std::max(masked_max, x);
  }
  EXPECT_GE(clip.lo(), 0);
  EXPECT_LE(causal_max, clip.hi());
  // Two-sided scores exceed the range and are clipped at the top.
  EXPECT_GT(masked_max, clip.hi());
}

TEST(ToyWorldTest, RejectsBadOptions) {
  ToyWorldOptions o;
  o.classes = 21;
  EXPECT_THAT(MakeToyWorld(o), StatusIs(absl::StatusCode::kInvalidArgument));
  o = ToyWorldOptions();
  o.min_length = 10;
  o.max_length = 5;
  EXPECT_THAT(MakeToyWorld(o), StatusIs(absl::StatusCode::kInvalidArgument));
  o = ToyWorldOptions();
  o.collocation = 1.5;
  EXPECT_THAT(MakeToyWorld(o), StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(WriteToyWorldTest, WritesLoadableFiles) {
  ToyWorldOptions o;
  o.corpus_sentences = 10;
  ASSERT_OK_AND_ASSIGN(ToyWorld world, MakeToyWorld(o));
  testing::TempDir dir;
  const std::string out = dir.File("toy");
  ASSERT_OK(WriteToyWorld(world, out, 11));
  ASSERT_OK_AND_ASSIGN(auto table, LoadEmbeddingTable(out + "/table.txt"));
  EXPECT_EQ(table.size(), world.table->size());
  EXPECT_EQ(table.vectors(), world.table->vectors());
  ASSERT_OK_AND_ASSIGN(auto corpus, LoadCorpus(out + "/corpus.txt"));
  EXPECT_EQ(corpus, world.corpus);
  ASSERT_OK_AND_ASSIGN(auto pairs, LoadPairs(out + "/pairs.tsv"));
  EXPECT_EQ(pairs.size(), o.pairs);
  ASSERT_OK_AND_ASSIGN(auto entries, LoadConfigFile(out + "/experiment.conf"));
  ExperimentConfig cfg;
  ASSERT_OK(ApplyConfig(entries, out, &cfg));
  EXPECT_EQ(cfg.seed, 11u);
  EXPECT_EQ(cfg.pairs_path, out + "/pairs.tsv");
  EXPECT_EQ(cfg.clip.hi(), ToyWorldClip().hi());
  EXPECT_OK(cfg.Validate());
}

}  // namespace
}  // namespace dpgeom
