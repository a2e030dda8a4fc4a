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

#include "dpgeom/geometry/knn.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::BruteForceKnn;
using ::dpgeom::testing::StatusIs;

TEST(KnnDistancesTest, CollinearPoints) {
  Matrix points(3, 1);
  points << 0, 1, 3;
  ASSERT_OK_AND_ASSIGN(Matrix knn, KnnDistances(points, 2));
  Matrix expected(3, 2);
  expected << 1, 3,  //
      1, 2,          //
      2, 3;
  EXPECT_EQ(knn, expected);
}

TEST(KnnDistancesTest, FirstNeighborOnly) {
  Matrix points(4, 2);
  points << 0, 0,  //
      3, 4,        //
      3, 5,        //
      10, 0;
  ASSERT_OK_AND_ASSIGN(Matrix knn, KnnDistances(points, 1));
  ASSERT_EQ(knn.cols(), 1);
  EXPECT_DOUBLE_EQ(knn(0, 0), 5);
  EXPECT_DOUBLE_EQ(knn(1, 0), 1);
  EXPECT_DOUBLE_EQ(knn(2, 0), 1);
  EXPECT_DOUBLE_EQ(knn(3, 0), std::sqrt(49.0 + 16.0));
}

TEST(KnnDistancesTest, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uniform(0, 1);
  Matrix points(100, 2);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    points(i, 0) = uniform(rng);
    points(i, 1) = uniform(rng);
  }
  for (std::size_t k : {1u, 2u, 7u}) {
    ASSERT_OK_AND_ASSIGN(Matrix knn, KnnDistances(points, k));
    const auto oracle = BruteForceKnn(points, k);
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_DOUBLE_EQ(knn(i, static_cast<Eigen::Index>(j)), oracle[i][j])
            << "point " << i << " neighbor " << j;
      }
    }
  }
}

TEST(KnnDistancesTest, RowsAscending) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  Matrix points(60, 7);
  for (Eigen::Index i = 0; i < points.size(); ++i) points.data()[i] = normal(rng);
  ASSERT_OK_AND_ASSIGN(Matrix knn, KnnDistances(points, 10));
  for (Eigen::Index i = 0; i < knn.rows(); ++i) {
    for (Eigen::Index j = 1; j < knn.cols(); ++j) {
      EXPECT_LE(knn(i, j - 1), knn(i, j));
    }
  }
}

TEST(KnnDistancesTest, DuplicateContributesZeroDistance) {
  Matrix points(4, 1);
  points << 0, 0, 1, 5;
  ASSERT_OK_AND_ASSIGN(Matrix knn, KnnDistances(points, 1));
  EXPECT_EQ(knn(0, 0), 0);
  EXPECT_EQ(knn(1, 0), 0);
}

TEST(KnnDistancesTest, RejectsKAtOrAboveUniqueCount) {
  Matrix points(4, 1);
  points << 0, 0, 1, 5;  // 3 unique
  EXPECT_THAT(KnnDistances(points, 3),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(KnnDistances(points, 0),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_OK(KnnDistances(points, 2));
}

}  // namespace
}  // namespace dpgeom
