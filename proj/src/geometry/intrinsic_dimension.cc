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

#include "dpgeom/geometry/intrinsic_dimension.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpgeom/common/status_macros.h"
#include "dpgeom/geometry/knn.h"

namespace dpgeom {
namespace {

constexpr std::size_t kMinUniquePoints = 3;

double SortedSum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  return sum;
}

absl::StatusOr<DeduplicatedPoints> UniquePoints(const PointCloud& cloud,
                                                std::size_t min_unique) {
  DeduplicatedPoints dedup = RemoveDuplicatePoints(cloud.points());
  if (static_cast<std::size_t>(dedup.points.rows()) < min_unique) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need at least ", min_unique, " unique points, cloud '",
        cloud.source_id(), "' has ", dedup.points.rows()));
  }
  return dedup;
}

absl::StatusOr<std::vector<double>> RatiosOf(const Matrix& unique) {
  ASSIGN_OR_RETURN(Matrix knn, KnnDistances(unique, 2));
  std::vector<double> mu(static_cast<std::size_t>(knn.rows()));
  for (Eigen::Index i = 0; i < knn.rows(); ++i) {
    if (knn(i, 0) <= 0) {
      return absl::InternalError("zero neighbor distance after deduplication");
    }
    mu[i] = knn(i, 1) / knn(i, 0);
  }
  return mu;
}

}  // namespace

absl::string_view EstimatorName(Estimator estimator) {
  switch (estimator) {
    case Estimator::kTwoNN:
      return "twonn";
    case Estimator::kLevinaBickel:
      return "lbmle";
  }
  return "unknown";
}

absl::StatusOr<Estimator> ParseEstimator(absl::string_view name) {
  if (name == "twonn") return Estimator::kTwoNN;
  if (name == "lbmle") return Estimator::kLevinaBickel;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown estimator '", name, "' (want twonn or lbmle)"));
}

absl::Status EstimatorConfig::Validate() const {
  if (!(discard_fraction >= 0 && discard_fraction < 1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "discard_fraction must lie in [0, 1), got ", discard_fraction));
  }
  if (k < 2) {
    return absl::InvalidArgumentError(absl::StrCat("k must be >= 2, got ", k));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<double>> NeighborRatios(const PointCloud& cloud) {
  ASSIGN_OR_RETURN(DeduplicatedPoints dedup,
                   UniquePoints(cloud, kMinUniquePoints));
  return RatiosOf(dedup.points);
}

absl::StatusOr<IdEstimate> TwoNN(const PointCloud& cloud,
                                 double discard_fraction) {
  EstimatorConfig params;
  params.kind = Estimator::kTwoNN;
  params.discard_fraction = discard_fraction;
  RETURN_IF_ERROR(params.Validate());

  ASSIGN_OR_RETURN(DeduplicatedPoints dedup,
                   UniquePoints(cloud, kMinUniquePoints));
  ASSIGN_OR_RETURN(std::vector<double> mu, RatiosOf(dedup.points));
  std::sort(mu.begin(), mu.end());

  const std::size_t n = mu.size();
  const auto discarded = static_cast<std::size_t>(
      std::ceil(discard_fraction * static_cast<double>(n)));
  if (discarded >= n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "discard_fraction ", discard_fraction, " leaves no ratios of ", n));
  }
  const std::size_t m = n - discarded;

  double log_sum = 0;
  for (std::size_t i = 0; i < m; ++i) log_sum += std::log(mu[i]);
  log_sum += static_cast<double>(discarded) * std::log(mu[m - 1]);
  if (!(log_sum > 0)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "degenerate cloud '", cloud.source_id(),
        "': every retained neighbor ratio equals 1"));
  }

  IdEstimate estimate;
  estimate.value = static_cast<double>(m) / log_sum;
  estimate.estimator = Estimator::kTwoNN;
  estimate.n_points = cloud.size();
  estimate.duplicates_removed = dedup.removed;
  estimate.n_used = m;
  estimate.params = params;
  return estimate;
}

absl::StatusOr<IdEstimate> LevinaBickel(const PointCloud& cloud,
                                        std::size_t k) {
  EstimatorConfig params;
  params.kind = Estimator::kLevinaBickel;
  params.k = k;
  RETURN_IF_ERROR(params.Validate());

  DeduplicatedPoints dedup = RemoveDuplicatePoints(cloud.points());
  const auto unique = static_cast<std::size_t>(dedup.points.rows());
  if (k >= unique) {
    return absl::InvalidArgumentError(absl::StrCat(
        "k must be < unique points (", unique, "), got ", k));
  }
  ASSIGN_OR_RETURN(Matrix t, KnnDistances(dedup.points, k));

  const auto kk = static_cast<Eigen::Index>(k);
  std::vector<double> per_point(unique);
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (t(i, 0) <= 0) {
      return absl::InternalError("zero neighbor distance after deduplication");
    }
    std::vector<double> logs(k - 1);
    for (Eigen::Index j = 0; j + 1 < kk; ++j) {
      logs[j] = std::log(t(i, kk - 1) / t(i, j));
    }
    const double mean_log = SortedSum(std::move(logs)) / static_cast<double>(k - 1);
    if (!(mean_log > 0)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "degenerate cloud '", cloud.source_id(), "': point ", i,
          " has all ", k, " neighbors at the same distance"));
    }
    per_point[i] = 1.0 / mean_log;
  }

  IdEstimate estimate;
  estimate.value = SortedSum(std::move(per_point)) / static_cast<double>(unique);
  estimate.estimator = Estimator::kLevinaBickel;
  estimate.n_points = cloud.size();
  estimate.duplicates_removed = dedup.removed;
  estimate.n_used = unique;
  estimate.params = params;
  return estimate;
}

absl::StatusOr<IdEstimate> EstimateId(const PointCloud& cloud,
                                      const EstimatorConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  switch (config.kind) {
    case Estimator::kTwoNN:
      return TwoNN(cloud, config.discard_fraction);
    case Estimator::kLevinaBickel:
      return LevinaBickel(cloud, config.k);
  }
  return absl::InvalidArgumentError("unknown estimator");
}

}  // namespace dpgeom
