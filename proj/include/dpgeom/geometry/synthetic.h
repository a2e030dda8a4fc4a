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

#ifndef DPGEOM_GEOMETRY_SYNTHETIC_H_
#define DPGEOM_GEOMETRY_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "absl/status/statusor.h"
#include "dpgeom/geometry/point_cloud.h"

namespace dpgeom {

enum class ManifoldKind {
  kHypercube,           // uniform in [0,1]^d
  kHypersphereSurface,  // uniform on the unit d-sphere in R^(d+1)
  kGaussianBlob,        // standard normal in R^d
};

struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::kHypercube;
  std::size_t intrinsic_dim = 1;
  std::size_t ambient_dim = 1;
  std::size_t n = 100;
  // When false the latent coordinates are zero-padded into R^D unrotated.
  bool rotate = true;
};

struct SyntheticSample {
  PointCloud cloud;
  // n x d (n x (d+1) for the sphere) coordinates before embedding.
  Matrix latent;
  // D x D orthogonal matrix; cloud = [latent | 0] * rotation^T.
  Matrix rotation;
};

// Samples points on a known manifold and embeds them in R^D through a seeded
// random rotation. Identical (spec, seed) pairs give identical output.
absl::StatusOr<SyntheticSample> SampleManifold(const ManifoldSpec& spec,
                                               std::uint64_t seed);

absl::StatusOr<PointCloud> SyntheticCloud(ManifoldKind kind,
                                          std::size_t intrinsic_dim,
                                          std::size_t ambient_dim,
                                          std::size_t n, std::uint64_t seed);

// Haar-distributed random orthogonal matrix of size dim x dim.
Matrix RandomRotation(std::size_t dim, std::uint64_t seed);

}  // namespace dpgeom

#endif  // DPGEOM_GEOMETRY_SYNTHETIC_H_
