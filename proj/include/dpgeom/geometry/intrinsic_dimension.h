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

// Intrinsic dimension estimators over point clouds.
//
// Both estimators work on Euclidean nearest-neighbor distances, remove exact
// duplicate points first (a zero first-neighbor distance has no finite log
// ratio) and report how many were removed. Per-point terms are sorted before
// they are summed, so the result depends only on the multiset of points and
// is bit-identical under any reordering of the input.

#ifndef DPGEOM_GEOMETRY_INTRINSIC_DIMENSION_H_
#define DPGEOM_GEOMETRY_INTRINSIC_DIMENSION_H_

#include <cstddef>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/geometry/point_cloud.h"

namespace dpgeom {

enum class Estimator { kTwoNN, kLevinaBickel };

// "twonn" / "lbmle".
absl::string_view EstimatorName(Estimator estimator);
absl::StatusOr<Estimator> ParseEstimator(absl::string_view name);

struct EstimatorConfig {
  Estimator kind = Estimator::kTwoNN;
  // TwoNN: fraction of the largest neighbor ratios treated as censored.
  double discard_fraction = 0.1;
  // Levina-Bickel: neighborhood size, >= 2.
  std::size_t k = 10;

  absl::Status Validate() const;
};

struct IdEstimate {
  double value = 0;
  Estimator estimator = Estimator::kTwoNN;
  std::size_t n_points = 0;            // input size
  std::size_t duplicates_removed = 0;  // exact duplicates dropped
  std::size_t n_used = 0;  // TwoNN: uncensored ratios; LB: unique points
  EstimatorConfig params;
};

// Second-to-first neighbor distance ratios r2/r1, one per unique point, in
// the order of the deduplicated cloud. Needs at least 3 unique points.
absl::StatusOr<std::vector<double>> NeighborRatios(const PointCloud& cloud);

// TwoNN estimate.
//
// Under local uniformity the ratios mu = r2/r1 follow a Pareto law with
// density d * mu^-(d+1), so ln(mu) is exponential with rate d. The
// ceil(discard_fraction * N) largest ratios are treated as right-censored at
// the largest retained ratio, which gives the closed-form maximum-likelihood
// estimate
//
//   d = M / ( sum_{i<=M} ln mu_(i) + (N - M) ln mu_(M) )
//
// over the M retained order statistics. With discard_fraction = 0 this is
// M / sum ln mu. Fails when fewer than 3 unique points remain, when the
// discard leaves no ratio, or when every retained ratio is 1.
absl::StatusOr<IdEstimate> TwoNN(const PointCloud& cloud,
                                 double discard_fraction = 0.1);

// Levina-Bickel maximum-likelihood estimate: the arithmetic mean over points
// of [ (1/(k-1)) sum_{j<k} ln(T_k / T_j) ]^-1 where T_j is the distance to
// the j-th neighbor. Requires 2 <= k < unique points.
absl::StatusOr<IdEstimate> LevinaBickel(const PointCloud& cloud,
                                        std::size_t k = 10);

absl::StatusOr<IdEstimate> EstimateId(const PointCloud& cloud,
                                      const EstimatorConfig& config);

}  // namespace dpgeom

#endif  // DPGEOM_GEOMETRY_INTRINSIC_DIMENSION_H_
