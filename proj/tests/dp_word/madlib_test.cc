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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "boost/math/special_functions/gamma.hpp"
#include "dpgeom/dp_word/word_tokenizer.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::KolmogorovSmirnov;
using ::dpgeom::testing::SpearmanCorrelation;
using ::dpgeom::testing::StatusIs;

PrivacyBudget Eps(double epsilon) { return *PrivacyBudget::Create(epsilon); }

// Five words on the axes of R^4, pairwise distance >= sqrt(2).
EmbeddingTable SeparatedTable() {
  Matrix v(5, 4);
  v << 1, 0, 0, 0,  //
      0, 1, 0, 0,   //
      0, 0, 1, 0,   //
      0, 0, 0, 1,   //
      -1, 0, 0, 0;
  return *EmbeddingTable::Create({"the", "cat", "sat", "on", "mat"}, v);
}

EmbeddingTable RandomTable(std::size_t v, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < v; ++i) tokens.push_back("w" + std::to_string(i));
  return *EmbeddingTable::Create(tokens, m);
}

TEST(PrivacyBudgetTest, RejectsNonPositiveAndNonFinite) {
  for (double bad : {0.0, -1.0, std::nan(""), HUGE_VAL}) {
    EXPECT_THAT(PrivacyBudget::Create(bad),
                StatusIs(absl::StatusCode::kInvalidArgument));
  }
  EXPECT_EQ(Eps(2.5).epsilon(), 2.5);
}

class MetricNoiseTest : public ::testing::Test {
 protected:
  static constexpr std::size_t kDim = 50;
  static constexpr double kEpsilon = 10;
  static constexpr int kDraws = 100000;

  static void SetUpTestSuite() {
    Rng rng(42);
    samples_ = new std::vector<Eigen::VectorXd>();
    samples_->reserve(kDraws);
    for (int i = 0; i < kDraws; ++i) {
      samples_->push_back(SampleMetricNoise(kDim, Eps(kEpsilon), rng));
    }
  }
  static void TearDownTestSuite() { delete samples_; }

  static std::vector<Eigen::VectorXd>* samples_;
};

std::vector<Eigen::VectorXd>* MetricNoiseTest::samples_ = nullptr;

TEST_F(MetricNoiseTest, MeanNormMatchesGammaMean) {
  double total = 0;
  for (const auto& z : *samples_) total += z.norm();
  const double mean = total / kDraws;
  EXPECT_NEAR(mean, kDim / kEpsilon, 0.02 * kDim / kEpsilon);
}

TEST_F(MetricNoiseTest, NormFollowsGammaLaw) {
  std::vector<double> norms;
  for (const auto& z : *samples_) norms.push_back(z.norm());
  const double ks = KolmogorovSmirnov(norms, [](double r) {
    return boost::math::gamma_p(static_cast<double>(kDim), kEpsilon * r);
  });
  EXPECT_LT(ks, 0.01);
}

TEST_F(MetricNoiseTest, ComponentMeansWithinThreeSigma) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(kDim);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(kDim);
  for (const auto& z : *samples_) {
    sum += z;
    sum_sq += z.cwiseProduct(z);
  }
  for (std::size_t c = 0; c < kDim; ++c) {
    const double mean = sum[c] / kDraws;
    const double var = sum_sq[c] / kDraws - mean * mean;
    const double sigma = std::sqrt(var / kDraws);
    EXPECT_LT(std::abs(mean), 3 * sigma) << "component " << c;
  }
}

TEST(MetricNoiseLimitTest, HugeEpsilonGivesTinyNoise) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(SampleMetricNoise(50, Eps(1e9), rng).norm(), 1e-6);
  }
}

TEST(MetricNoiseLimitTest, DeterministicPerSeed) {
  Rng a(9), b(9);
  EXPECT_EQ(SampleMetricNoise(8, Eps(3), a), SampleMetricNoise(8, Eps(3), b));
}

TEST(NearestTokenTest, ExactVectorReturnsItself) {
  const EmbeddingTable table = RandomTable(10, 6, 3);
  for (std::size_t i = 0; i < table.size(); ++i) {
    ASSERT_OK_AND_ASSIGN(std::size_t nearest,
                         NearestToken(table.vector(i), table));
    EXPECT_EQ(nearest, i);
  }
}

TEST(NearestTokenTest, TieGoesToLowerIndex) {
  Matrix v(7, 2);
  v << 9, 9,  //
      8, 8,   //
      1, 0,   //
      7, 7,   //
      6, 6,   //
      -1, 0,  //
      5, 5;
  std::vector<std::string> tokens = {"a", "b", "c", "d", "e", "f", "g"};
  ASSERT_OK_AND_ASSIGN(EmbeddingTable table, EmbeddingTable::Create(tokens, v));
  ASSERT_OK_AND_ASSIGN(std::size_t nearest,
                       NearestToken(Eigen::RowVector2d(0, 0), table));
  EXPECT_EQ(nearest, 2u);
}

TEST(NearestTokenTest, MatchesLinearScanOracle) {
  const EmbeddingTable table = RandomTable(10, 5, 7);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal(0, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::RowVectorXd query(5);
    for (Eigen::Index c = 0; c < 5; ++c) query[c] = normal(rng);
    std::size_t oracle = 0;
    double best = INFINITY;
    for (std::size_t i = 0; i < table.size(); ++i) {
      double dist = 0;
      for (Eigen::Index c = 0; c < 5; ++c) {
        const double diff = table.vector(i)[c] - query[c];
        dist += diff * diff;
      }
      if (dist < best) {
        best = dist;
        oracle = i;
      }
    }
    ASSERT_OK_AND_ASSIGN(std::size_t nearest, NearestToken(query, table));
    EXPECT_EQ(nearest, oracle);
  }
}

TEST(NearestTokenTest, RejectsDimensionMismatch) {
  EXPECT_THAT(NearestToken(Eigen::RowVector3d(0, 0, 0), SeparatedTable()),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(MadlibRewriteTest, HugeEpsilonIsIdentity) {
  const EmbeddingTable table = SeparatedTable();
  const std::vector<std::string> words = {"the", "cat", "sat", "on", "the",
                                          "mat"};
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    WordRewrite out = MadlibRewrite(words, table, Eps(1e9), rng);
    EXPECT_EQ(out.words, words);
    for (const auto& record : out.records) EXPECT_TRUE(record.self_substituted);
  }
}

TEST(MadlibRewriteTest, EmptyInputGivesEmptyOutput) {
  Rng rng(1);
  WordRewrite out = MadlibRewrite({}, SeparatedTable(), Eps(1), rng);
  EXPECT_TRUE(out.words.empty());
  EXPECT_TRUE(out.records.empty());
}

TEST(MadlibRewriteTest, LengthPreservedAndRecordsConsistent) {
  const EmbeddingTable table = SeparatedTable();
  const std::vector<std::string> words =
      SplitWords("the cat , sat on the mat ; on the dog !");
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    WordRewrite out = MadlibRewrite(words, table, Eps(25), rng);
    ASSERT_EQ(out.words.size(), words.size());
    ASSERT_EQ(out.records.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      const WordRewriteRecord& r = out.records[i];
      EXPECT_EQ(r.original, words[i]);
      EXPECT_EQ(r.replacement, out.words[i]);
      EXPECT_EQ(r.self_substituted, r.original == r.replacement);
      EXPECT_GE(r.noise_norm, 0);
      EXPECT_EQ(r.in_vocabulary, table.Find(words[i]).has_value());
      if (!r.in_vocabulary) {
        EXPECT_EQ(r.replacement, r.original);
        EXPECT_EQ(r.noise_norm, 0);
      } else {
        EXPECT_TRUE(table.Find(r.replacement).has_value());
      }
    }
  }
}

TEST(MadlibRewriteTest, OutOfVocabularyConsumesNoRandomness) {
  const EmbeddingTable table = SeparatedTable();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed), b(seed);
    const std::vector<std::string> plain = {"cat", "sat"};
    const std::vector<std::string> padded = {"zebra", "cat", ",", "sat", "!"};
    WordRewrite x = MadlibRewrite(plain, table, Eps(2), a);
    WordRewrite y = MadlibRewrite(padded, table, Eps(2), b);
    EXPECT_EQ(x.words[0], y.words[1]);
    EXPECT_EQ(x.words[1], y.words[3]);
  }
}

TEST(MadlibRewriteTest, MatchesPerWordCallsWithSharedGenerator) {
  const EmbeddingTable table = RandomTable(20, 6, 4);
  const std::vector<std::string> words = {"w1", "w5", "w1", "w19", "w0"};
  Rng a(77), b(77);
  WordRewrite out = MadlibRewrite(words, table, Eps(3), a);
  for (std::size_t i = 0; i < words.size(); ++i) {
    EXPECT_EQ(out.words[i],
              PerturbWord(words[i], table, Eps(3), b).replacement);
  }
}

TEST(MadlibRewriteTest, WordOutputIgnoresOtherWords) {
  // Coupled seeds: the first word draws from the same generator state in
  // every permutation of the rest of the sentence.
  const EmbeddingTable table = RandomTable(20, 6, 4);
  std::vector<std::string> rest = {"w2", "w3", "w4", "w9"};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::vector<std::string> words = {"w7"};
    words.insert(words.end(), rest.begin(), rest.end());
    Rng reference_rng(seed);
    const std::string reference =
        MadlibRewrite(words, table, Eps(2), reference_rng).words[0];
    std::mt19937_64 shuffle_rng(seed);
    for (int p = 0; p < 3; ++p) {
      std::shuffle(words.begin() + 1, words.end(), shuffle_rng);
      Rng rng(seed);
      EXPECT_EQ(MadlibRewrite(words, table, Eps(2), rng).words[0], reference);
    }
  }
}

TEST(MadlibRewriteTest, MarginalIndependentOfPrecedingWord) {
  const EmbeddingTable table = RandomTable(8, 3, 12);
  std::map<std::string, double> after_a, after_b;
  constexpr int kTrials = 4000;
  for (int t = 0; t < kTrials; ++t) {
    Rng ra(1000 + t), rb(900000 + t);
    const std::vector<std::string> sa = {"w1", "w5"};
    const std::vector<std::string> sb = {"w6", "w5"};
    after_a[MadlibRewrite(sa, table, Eps(2), ra).words[1]] += 1.0 / kTrials;
    after_b[MadlibRewrite(sb, table, Eps(2), rb).words[1]] += 1.0 / kTrials;
  }
  double tv = 0;
  for (const std::string& token : table.tokens()) {
    tv += std::abs(after_a[token] - after_b[token]) / 2;
  }
  EXPECT_LT(tv, 0.05);
}

TEST(MadlibRewriteTest, SelfSubstitutionRateRisesWithEpsilon) {
  const EmbeddingTable table = RandomTable(30, 10, 2);
  const std::vector<double> epsilons = {1, 5, 25, 125};
  std::vector<double> rates;
  for (double eps : epsilons) {
    Rng rng(StableHasher().Add(eps).Finish());
    int same = 0, total = 0;
    for (int trial = 0; trial < 200; ++trial) {
      WordRewrite out = MadlibRewrite(table.tokens(), table, Eps(eps), rng);
      for (const auto& r : out.records) {
        same += r.self_substituted ? 1 : 0;
        ++total;
      }
    }
    rates.push_back(static_cast<double>(same) / total);
  }
  EXPECT_GT(SpearmanCorrelation(epsilons, rates), 0);
  for (std::size_t i = 1; i < rates.size(); ++i) {
    EXPECT_GE(rates[i], rates[i - 1]);
  }
}

TEST(MadlibRewriteTest, DeterministicPerSeed) {
  const EmbeddingTable table = RandomTable(20, 6, 4);
  const std::vector<std::string> words = {"w1", "w2", "w3"};
  Rng a(3), b(3);
  EXPECT_EQ(MadlibRewrite(words, table, Eps(1), a).words,
            MadlibRewrite(words, table, Eps(1), b).words);
}

}  // namespace
}  // namespace dpgeom
