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

#ifndef DPGEOM_GEOMETRY_POINT_CLOUD_H_
#define DPGEOM_GEOMETRY_POINT_CLOUD_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpgeom {

// Row-major N x D matrix; row i is point i.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// An ordered set of N >= 1 points in R^D with D >= 1 and finite coordinates.
// Order is kept for reproducibility but carries no meaning for estimation.
class PointCloud {
 public:
  static absl::StatusOr<PointCloud> Create(Matrix points,
                                           std::string source_id = "");

  const Matrix& points() const { return points_; }
  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(points_.cols()); }
  const std::string& source_id() const { return source_id_; }

 private:
  PointCloud(Matrix points, std::string source_id)
      : points_(std::move(points)), source_id_(std::move(source_id)) {}

  Matrix points_;
  std::string source_id_;
};

// Token filtering applied when a text is turned into a point cloud.
struct FilterConfig {
  std::size_t min_tokens = 15;
  std::size_t max_tokens = 128;
  bool drop_special = true;

  absl::Status Validate() const;
};

// Builds the point cloud of one embedded text.
//
// Special (demarcation) tokens are removed first when `cfg.drop_special` is
// set. A text left with fewer than `cfg.min_tokens` tokens is filtered out and
// yields std::nullopt; a longer one keeps only its first `cfg.max_tokens`
// tokens. `vectors` row i belongs to `tokens[i]`.
absl::StatusOr<std::optional<PointCloud>> BuildPointCloud(
    std::span<const std::string> tokens, const Matrix& vectors,
    const std::vector<bool>& special_mask, const FilterConfig& cfg,
    std::string source_id = "");

struct DeduplicatedPoints {
  Matrix points;
  std::size_t removed = 0;
};

// Removes exact duplicate rows, keeping the first occurrence of each in the
// original order.
DeduplicatedPoints RemoveDuplicatePoints(const Matrix& points);

// Number of distinct rows.
std::size_t CountUniquePoints(const Matrix& points);

}  // namespace dpgeom

#endif  // DPGEOM_GEOMETRY_POINT_CLOUD_H_
