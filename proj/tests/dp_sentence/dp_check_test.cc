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

#include "dpgeom/dp_sentence/dp_check.h"

#include <cmath>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::StatusIs;
using ::testing::DoubleNear;

PrivacyBudget Eps(double epsilon) { return *PrivacyBudget::Create(epsilon); }

// Worst case over clipped vectors of width w: token t at hi with the rest at
// lo, against t at lo with the rest at hi.
double ClosedFormMaxRatio(double width, double temperature, std::size_t v) {
  const double e = std::exp(width / temperature);
  const double others = static_cast<double>(v - 1);
  return e * (1 + others * e) / (e + others);
}

TEST(DpCheckTest, SingleTokenRatioIsExactlyOne) {
  ASSERT_OK_AND_ASSIGN(DpRatioResult result,
                       DpRatioCheck(ClipConfig::Default(), Eps(1), 1, 0.5));
  EXPECT_EQ(result.max_ratio, 1.0);
}

TEST(DpCheckTest, IdenticalVectorsGiveRatioOne) {
  const std::vector<double> u = {0.3, -0.2, 0.9};
  const std::vector<double> p = SoftmaxProbabilities(u, 0.4);
  const std::vector<double> q = SoftmaxProbabilities(u, 0.4);
  for (std::size_t t = 0; t < p.size(); ++t) EXPECT_EQ(p[t] / q[t], 1.0);
}

TEST(DpCheckTest, TwoTokensUnitClipEpsilonOne) {
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(0, 1));
  ASSERT_OK_AND_ASSIGN(DpRatioResult result, DpRatioCheck(clip, Eps(1), 2, 0.1));
  EXPECT_LE(result.max_ratio, std::exp(1.0));
  EXPECT_EQ(result.grid_points_per_axis, 11u);
  EXPECT_EQ(result.vectors, 121u);
  EXPECT_EQ(result.temperature, 2.0);
  // For two tokens the bound is attained at e^(width / T) = e^(epsilon / 2).
  EXPECT_THAT(result.max_ratio, DoubleNear(std::exp(0.5), 1e-12));
}

TEST(DpCheckTest, MatchesClosedFormOracle) {
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(-1, 1));
  for (std::size_t v : {2u, 3u, 4u}) {
    for (double eps : {0.5, 1.0, 2.0, 5.0}) {
      ASSERT_OK_AND_ASSIGN(DpRatioResult result,
                           DpRatioCheck(clip, Eps(eps), v, 0.25));
      const double oracle =
          ClosedFormMaxRatio(clip.width(), result.temperature, v);
      EXPECT_THAT(result.max_ratio, DoubleNear(oracle, 1e-12 * oracle))
          << "V=" << v << " eps=" << eps;
      EXPECT_LE(result.max_ratio, std::exp(eps) + 1e-9);
    }
  }
}

TEST(DpCheckTest, DoublingTemperatureHalvesExponent) {
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(0, 1));
  for (double t : {0.5, 1.0, 2.0}) {
    ASSERT_OK_AND_ASSIGN(DpRatioResult at_t,
                         MaxProbabilityRatio(clip, t, 2, 0.1));
    ASSERT_OK_AND_ASSIGN(DpRatioResult at_2t,
                         MaxProbabilityRatio(clip, 2 * t, 2, 0.1));
    EXPECT_THAT(std::log(at_2t.max_ratio),
                DoubleNear(std::log(at_t.max_ratio) / 2, 1e-12));
  }
}

TEST(DpCheckTest, BoundHoldsOnDefaultGrid) {
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(-1, 1));
  for (double eps : {0.5, 1.0, 2.0}) {
    ASSERT_OK_AND_ASSIGN(DpRatioResult result,
                         DpRatioCheck(clip, Eps(eps), 3, 0.25));
    EXPECT_EQ(result.grid_points_per_axis, 9u);
    EXPECT_LE(result.max_ratio, std::exp(eps) + 1e-9);
  }
}

TEST(DpCheckTest, EndpointAlwaysOnGrid) {
  ASSERT_OK_AND_ASSIGN(ClipConfig clip, ClipConfig::Create(0, 1));
  ASSERT_OK_AND_ASSIGN(DpRatioResult result,
                       MaxProbabilityRatio(clip, 1.0, 2, 0.3));
  // {0, 0.3, 0.6, 0.9, 1}
  EXPECT_EQ(result.grid_points_per_axis, 5u);
  EXPECT_THAT(result.max_ratio, DoubleNear(std::exp(1.0), 1e-12));
}

TEST(DpCheckTest, RejectsInfeasibleOrInvalidInput) {
  const ClipConfig clip = ClipConfig::Default();
  EXPECT_THAT(DpRatioCheck(clip, Eps(1), 0, 0.5),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DpRatioCheck(clip, Eps(1), 11, 0.5),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DpRatioCheck(clip, Eps(1), 3, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(DpRatioCheck(clip, Eps(1), 10, 0.01),
              StatusIs(absl::StatusCode::kResourceExhausted));
  EXPECT_THAT(MaxProbabilityRatio(clip, 0, 2, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(MaxProbabilityRatio(clip, 1e-3, 2, 1),
              StatusIs(absl::StatusCode::kOutOfRange));
}

}  // namespace
}  // namespace dpgeom
