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

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"

namespace dpgeom {

absl::StatusOr<Matrix> KnnDistances(const Matrix& points, std::size_t k) {
  const std::size_t unique = CountUniquePoints(points);
  if (k < 1 || k >= unique) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must satisfy 1 <= k < unique points (", unique,
                     "), got ", k));
  }
  const Eigen::Index n = points.rows();
  const Eigen::Index d = points.cols();
  const auto kk = static_cast<Eigen::Index>(k);

  // Distances are formed from coordinate differences rather than the
  // |a|^2 + |b|^2 - 2ab expansion so that dist(i, j) == dist(j, i) bit for
  // bit and scaling by a power of two scales every distance exactly.
  Matrix result(n, kk);
  std::vector<double> row(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    std::size_t w = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double sum = 0;
      for (Eigen::Index c = 0; c < d; ++c) {
        const double diff = points(i, c) - points(j, c);
        sum += diff * diff;
      }
      row[w++] = std::sqrt(sum);
    }
    std::partial_sort(row.begin(), row.begin() + kk, row.end());
    for (Eigen::Index c = 0; c < kk; ++c) result(i, c) = row[c];
  }
  return result;
}

absl::StatusOr<Matrix> KnnDistances(const PointCloud& cloud, std::size_t k) {
  return KnnDistances(cloud.points(), k);
}

}  // namespace dpgeom
