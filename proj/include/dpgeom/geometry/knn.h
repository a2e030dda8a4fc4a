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

#ifndef DPGEOM_GEOMETRY_KNN_H_
#define DPGEOM_GEOMETRY_KNN_H_

#include <cstddef>

#include "absl/status/statusor.h"
#include "dpgeom/geometry/point_cloud.h"

namespace dpgeom {

// Exact brute-force k-nearest-neighbor distances.
//
// Row i of the result holds the Euclidean distances from point i to its k
// nearest other points, ascending. Point i itself is excluded by index, so a
// duplicate of i contributes a zero distance. Requires
// 1 <= k < CountUniquePoints(points).
absl::StatusOr<Matrix> KnnDistances(const Matrix& points, std::size_t k);
absl::StatusOr<Matrix> KnnDistances(const PointCloud& cloud, std::size_t k);

}  // namespace dpgeom

#endif  // DPGEOM_GEOMETRY_KNN_H_
