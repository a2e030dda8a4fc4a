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

#include "dpgeom/geometry/synthetic.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/test_util.h"

namespace dpgeom {
namespace {

using ::dpgeom::testing::StatusIs;

TEST(SampleManifoldTest, UnrotatedCubeStaysInUnitCube) {
  ManifoldSpec spec{ManifoldKind::kHypercube, 3, 3, 10, /*rotate=*/false};
  ASSERT_OK_AND_ASSIGN(SyntheticSample sample, SampleManifold(spec, 7));
  const Matrix& points = sample.cloud.points();
  ASSERT_EQ(points.rows(), 10);
  ASSERT_EQ(points.cols(), 3);
  EXPECT_GE(points.minCoeff(), 0.0);
  EXPECT_LE(points.maxCoeff(), 1.0);
  EXPECT_EQ(points, sample.latent);
}

TEST(SampleManifoldTest, RotatedCubeLatentInUnitCube) {
  ManifoldSpec spec{ManifoldKind::kHypercube, 3, 3, 10, /*rotate=*/true};
  ASSERT_OK_AND_ASSIGN(SyntheticSample sample, SampleManifold(spec, 7));
  EXPECT_GE(sample.latent.minCoeff(), 0.0);
  EXPECT_LE(sample.latent.maxCoeff(), 1.0);
}

TEST(SampleManifoldTest, SpherePointsAreUnitNormAfterUnrotating) {
  ManifoldSpec spec{ManifoldKind::kHypersphereSurface, 2, 10, 500, true};
  ASSERT_OK_AND_ASSIGN(SyntheticSample sample, SampleManifold(spec, 1));
  ASSERT_EQ(sample.latent.cols(), 3);
  const Matrix unrotated = sample.cloud.points() * sample.rotation;
  for (Eigen::Index i = 0; i < unrotated.rows(); ++i) {
    EXPECT_NEAR(unrotated.row(i).head(3).norm(), 1.0, 1e-9);
    EXPECT_NEAR(unrotated.row(i).tail(7).norm(), 0.0, 1e-9);
  }
}

TEST(SampleManifoldTest, RotationIsOrthogonal) {
  const Matrix q = RandomRotation(12, 4);
  const Matrix identity = Matrix::Identity(12, 12);
  EXPECT_TRUE((q * q.transpose()).isApprox(identity, 1e-12));
  EXPECT_EQ(q, RandomRotation(12, 4));
  EXPECT_NE(q, RandomRotation(12, 5));
}

TEST(SampleManifoldTest, SameSeedSameCloud) {
  for (ManifoldKind kind :
       {ManifoldKind::kHypercube, ManifoldKind::kHypersphereSurface,
        ManifoldKind::kGaussianBlob}) {
    ASSERT_OK_AND_ASSIGN(PointCloud a, SyntheticCloud(kind, 2, 6, 50, 9));
    ASSERT_OK_AND_ASSIGN(PointCloud b, SyntheticCloud(kind, 2, 6, 50, 9));
    ASSERT_OK_AND_ASSIGN(PointCloud c, SyntheticCloud(kind, 2, 6, 50, 10));
    EXPECT_EQ(a.points(), b.points());
    EXPECT_NE(a.points(), c.points());
  }
}

TEST(SampleManifoldTest, IntrinsicAboveAmbientIsAnError) {
  EXPECT_THAT(SyntheticCloud(ManifoldKind::kHypercube, 4, 3, 10, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  // The d-sphere needs d + 1 coordinates.
  EXPECT_THAT(SyntheticCloud(ManifoldKind::kHypersphereSurface, 3, 3, 10, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_OK(SyntheticCloud(ManifoldKind::kHypersphereSurface, 2, 3, 10, 1));
  EXPECT_THAT(SyntheticCloud(ManifoldKind::kHypercube, 0, 3, 10, 1),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

}  // namespace
}  // namespace dpgeom
