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

#include "dpgeom/dp_sentence/sampling.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "boost/math/distributions/chi_squared.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::StatusIs;
using ::testing::ElementsAre;

PrivacyBudget Eps(double epsilon) { return *PrivacyBudget::Create(epsilon); }

TEST(ClipConfigTest, Validates) {
  EXPECT_THAT(ClipConfig::Create(1, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ClipConfig::Create(2, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(ClipConfig::Create(-HUGE_VAL, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(-1, 3));
  EXPECT_EQ(clip.width(), 4);
  EXPECT_EQ(ClipConfig::Default().lo(), -5);
  EXPECT_EQ(ClipConfig::Default().hi(), 5);
}

TEST(ClipLogitsTest, ClampsIntoRange) {
  const std::vector<double> logits = {3, -7, 0};
  ASSERT_OK_AND_ASSIGN(std::vector<double> clipped,
                       ClipLogits(logits, ClipConfig::Default()));
  EXPECT_THAT(clipped, ElementsAre(3, -5, 0));
}

TEST(ClipLogitsTest, InRangeUnchanged) {
  const std::vector<double> logits = {4.9, -5, 5, 0.25};
  ASSERT_OK_AND_ASSIGN(std::vector<double> clipped,
                       ClipLogits(logits, ClipConfig::Default()));
  EXPECT_EQ(clipped, logits);
}

TEST(ClipLogitsTest, Idempotent) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(20);
    for (double& v : x) v = normal(rng);
    ASSERT_OK_AND_ASSIGN(std::vector<double> once,
                         ClipLogits(x, ClipConfig::Default()));
    ASSERT_OK_AND_ASSIGN(std::vector<double> twice,
                         ClipLogits(once, ClipConfig::Default()));
    EXPECT_EQ(once, twice);
  }
}

TEST(ClipLogitsTest, RejectsNonFinite) {
  const std::vector<double> logits = {1, std::nan("")};
  EXPECT_THAT(ClipLogits(logits, ClipConfig::Default()),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(TemperatureForTest, Formula) {
  EXPECT_DOUBLE_EQ(TemperatureFor(Eps(100), ClipConfig::Default()), 0.2);
  EXPECT_EQ(TemperatureFor(Eps(10), *ClipConfig::Create(0, 10)), 2.0);
}

TEST(TemperatureForTest, DoublingEpsilonHalvesTemperatureExactly) {
  for (double eps : {0.1, 0.7, 1.0, 3.3, 10.0, 17.0, 100.0, 1e6}) {
    for (const ClipConfig& clip :
         {ClipConfig::Default(), *ClipConfig::Create(0, 1),
          *ClipConfig::Create(-0.3, 2.9)}) {
      EXPECT_EQ(TemperatureFor(Eps(2 * eps), clip),
                TemperatureFor(Eps(eps), clip) / 2);
    }
  }
}

TEST(TemperatureForTest, LargeEpsilonApproachesZero) {
  EXPECT_LT(TemperatureFor(Eps(1e12), ClipConfig::Default()), 1e-10);
}

TEST(SoftmaxTest, NormalizedAndStable) {
  const std::vector<double> logits = {1000, 1001, 999};
  const std::vector<double> p = SoftmaxProbabilities(logits, 1.0);
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-15);
  const double z = 1 + std::exp(1.0) + std::exp(-1.0);
  EXPECT_NEAR(p[0], 1 / z, 1e-15);
  EXPECT_NEAR(p[1], std::exp(1.0) / z, 1e-15);
}

TEST(SampleTokenTest, GreedyLimit) {
  const std::vector<double> logits = {0, 10};
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_OK_AND_ASSIGN(std::size_t index, SampleToken(logits, 1e-6, rng));
    ASSERT_EQ(index, 1u);
  }
}

TEST(SampleTokenTest, UniformLogitsPassChiSquare) {
  constexpr int kDraws = 100000;
  const std::vector<double> logits(8, 0.5);
  std::vector<double> counts(8, 0);
  Rng rng(2);
  for (int i = 0; i < kDraws; ++i) {
    ASSERT_OK_AND_ASSIGN(std::size_t index, SampleToken(logits, 1.0, rng));
    counts[index] += 1;
  }
  const double expected = kDraws / 8.0;
  double chi2 = 0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  const double critical =
      boost::math::quantile(boost::math::chi_squared(7), 0.99);
  EXPECT_LT(chi2, critical);
}

TEST(SampleTokenTest, OddsRatioMatchesSoftmax) {
  constexpr int kDraws = 100000;
  for (auto [delta, temperature] :
       {std::pair{1.0, 1.0}, std::pair{2.0, 4.0}, std::pair{0.5, 0.25}}) {
    const std::vector<double> logits = {0, delta};
    Rng rng(3);
    double ones = 0;
    for (int i = 0; i < kDraws; ++i) {
      ASSERT_OK_AND_ASSIGN(std::size_t index,
                           SampleToken(logits, temperature, rng));
      ones += static_cast<double>(index);
    }
    const double odds = ones / (kDraws - ones);
    const double exact = std::exp(delta / temperature);
    EXPECT_NEAR(odds, exact, 0.05 * exact)
        << "delta " << delta << " T " << temperature;
  }
}

TEST(SampleTokenTest, ConsumesExactlyOneVariate) {
  const std::vector<double> logits = {0.1, 2, -3, 0.4};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed), b(seed);
    ASSERT_OK(SampleToken(logits, 0.7, a));
    b.discard(1);
    EXPECT_EQ(a, b);
  }
}

TEST(SampleTokenTest, RejectsBadInput) {
  Rng rng(1);
  EXPECT_THAT(SampleToken({}, 1, rng),
              StatusIs(absl::StatusCode::kInvalidArgument));
  const std::vector<double> logits = {0, 1};
  EXPECT_THAT(SampleToken(logits, 0, rng),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(SampleToken(logits, -1, rng),
              StatusIs(absl::StatusCode::kInvalidArgument));
  const std::vector<double> bad = {0, HUGE_VAL};
  EXPECT_THAT(SampleToken(bad, 1, rng),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

}  // namespace
}  // namespace dpgeom
