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

#include "dpgeom/geometry/point_cloud.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace dpgeom {
namespace {

bool RowLess(const Matrix& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m(a, c) < m(b, c)) return true;
    if (m(b, c) < m(a, c)) return false;
  }
  return false;
}

bool RowEqual(const Matrix& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m(a, c) != m(b, c)) return false;
  }
  return true;
}

// keep[i] is true for the first occurrence of each distinct row.
std::vector<bool> FirstOccurrences(const Matrix& points) {
  const Eigen::Index n = points.rows();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Stable sort keeps equal rows in index order, so the first of each run is
  // the earliest occurrence.
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return RowLess(points, a, b);
                   });
  std::vector<bool> keep(n, true);
  for (Eigen::Index i = 1; i < n; ++i) {
    if (RowEqual(points, order[i - 1], order[i])) keep[order[i]] = false;
  }
  return keep;
}

}  // namespace

absl::StatusOr<PointCloud> PointCloud::Create(Matrix points,
                                              std::string source_id) {
  if (points.rows() < 1 || points.cols() < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("point cloud needs N >= 1 and D >= 1, got ",
                     points.rows(), " x ", points.cols()));
  }
  if (!points.allFinite()) {
    return absl::InvalidArgumentError(
        absl::StrCat("point cloud '", source_id,
                     "' has non-finite coordinates"));
  }
  return PointCloud(std::move(points), std::move(source_id));
}

absl::Status FilterConfig::Validate() const {
  if (min_tokens < 1 || min_tokens > max_tokens) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 1 <= min_tokens <= max_tokens, got ", min_tokens,
                     " and ", max_tokens));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::optional<PointCloud>> BuildPointCloud(
    std::span<const std::string> tokens, const Matrix& vectors,
    const std::vector<bool>& special_mask, const FilterConfig& cfg,
    std::string source_id) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  const auto n = static_cast<Eigen::Index>(tokens.size());
  if (vectors.rows() != n ||
      special_mask.size() != static_cast<std::size_t>(n)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "text '", source_id, "': ", tokens.size(), " tokens, ",
        vectors.rows(), " vectors and ", special_mask.size(),
        " special flags"));
  }
  if (!vectors.allFinite()) {
    return absl::InvalidArgumentError(
        absl::StrCat("text '", source_id, "' has non-finite coordinates"));
  }

  std::vector<Eigen::Index> kept;
  kept.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cfg.drop_special && special_mask[i]) continue;
    kept.push_back(i);
  }
  if (kept.size() < cfg.min_tokens) return std::optional<PointCloud>();
  if (kept.size() > cfg.max_tokens) kept.resize(cfg.max_tokens);

  Matrix points(static_cast<Eigen::Index>(kept.size()), vectors.cols());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    points.row(static_cast<Eigen::Index>(r)) = vectors.row(kept[r]);
  }
  auto cloud = PointCloud::Create(std::move(points), std::move(source_id));
  if (!cloud.ok()) return cloud.status();
  return std::optional<PointCloud>(*std::move(cloud));
}

DeduplicatedPoints RemoveDuplicatePoints(const Matrix& points) {
  const std::vector<bool> keep = FirstOccurrences(points);
  const auto unique =
      static_cast<Eigen::Index>(std::count(keep.begin(), keep.end(), true));
  DeduplicatedPoints out;
  out.points.resize(unique, points.cols());
  out.removed = static_cast<std::size_t>(points.rows() - unique);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    if (keep[i]) out.points.row(r++) = points.row(i);
  }
  return out;
}

std::size_t CountUniquePoints(const Matrix& points) {
  const std::vector<bool> keep = FirstOccurrences(points);
  return static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
}

}  // namespace dpgeom
