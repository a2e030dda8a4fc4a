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

#include <random>

#include "Eigen/QR"
#include "absl/strings/str_cat.h"
#include "dpgeom/common/random.h"
#include "dpgeom/common/status_macros.h"

namespace dpgeom {

Matrix RandomRotation(std::size_t dim, std::uint64_t seed) {
  Rng rng(StableHasher().Add(seed).Add(absl::string_view("rotation")).Finish());
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd gaussian(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) gaussian(r, c) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  // Fixing the signs of diag(R) makes Q Haar-distributed.
  for (Eigen::Index c = 0; c < n; ++c) {
    if (r(c, c) < 0) q.col(c) *= -1;
  }
  return q;
}

absl::StatusOr<SyntheticSample> SampleManifold(const ManifoldSpec& spec,
                                               std::uint64_t seed) {
  const std::size_t d = spec.intrinsic_dim;
  const std::size_t latent_dim =
      spec.kind == ManifoldKind::kHypersphereSurface ? d + 1 : d;
  if (d < 1 || spec.n < 1) {
    return absl::InvalidArgumentError("need intrinsic_dim >= 1 and n >= 1");
  }
  if (latent_dim > spec.ambient_dim) {
    return absl::InvalidArgumentError(absl::StrCat(
        "manifold needs ", latent_dim, " ambient coordinates, D = ",
        spec.ambient_dim));
  }

  Rng rng(StableHasher().Add(seed).Add(absl::string_view("points")).Finish());
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal;

  const auto n = static_cast<Eigen::Index>(spec.n);
  const auto ld = static_cast<Eigen::Index>(latent_dim);
  Matrix latent(n, ld);
  for (Eigen::Index i = 0; i < n; ++i) {
    switch (spec.kind) {
      case ManifoldKind::kHypercube:
        for (Eigen::Index c = 0; c < ld; ++c) latent(i, c) = uniform(rng);
        break;
      case ManifoldKind::kGaussianBlob:
        for (Eigen::Index c = 0; c < ld; ++c) latent(i, c) = normal(rng);
        break;
      case ManifoldKind::kHypersphereSurface: {
        double norm = 0;
        do {
          for (Eigen::Index c = 0; c < ld; ++c) latent(i, c) = normal(rng);
          norm = latent.row(i).norm();
        } while (norm == 0);
        latent.row(i) /= norm;
        break;
      }
    }
  }

  const auto ad = static_cast<Eigen::Index>(spec.ambient_dim);
  Matrix padded = Matrix::Zero(n, ad);
  padded.leftCols(ld) = latent;
  Matrix rotation = spec.rotate ? RandomRotation(spec.ambient_dim, seed)
                                : Matrix(Matrix::Identity(ad, ad));
  Matrix points = padded * rotation.transpose();

  ASSIGN_OR_RETURN(PointCloud cloud,
                   PointCloud::Create(std::move(points),
                                      absl::StrCat("synthetic-", seed)));
  return SyntheticSample{std::move(cloud), std::move(latent),
                         std::move(rotation)};
}

absl::StatusOr<PointCloud> SyntheticCloud(ManifoldKind kind,
                                          std::size_t intrinsic_dim,
                                          std::size_t ambient_dim,
                                          std::size_t n, std::uint64_t seed) {
  ManifoldSpec spec{kind, intrinsic_dim, ambient_dim, n, /*rotate=*/true};
  ASSIGN_OR_RETURN(SyntheticSample sample, SampleManifold(spec, seed));
  return std::move(sample.cloud);
}

}  // namespace dpgeom
