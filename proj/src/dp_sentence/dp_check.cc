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

#include "dpgeom/dp_sentence/dp_check.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"

namespace dpgeom {
namespace {

std::vector<double> GridAxis(const ClipConfig& clip, double step) {
  std::vector<double> axis;
  // Tolerate rounding so that e.g. width 2, step 0.25 yields 9 points.
  const auto intervals = static_cast<std::size_t>(
      std::floor(clip.width() / step * (1 + 1e-12)));
  for (std::size_t i = 0; i <= intervals; ++i) {
    axis.push_back(std::min(clip.lo() + static_cast<double>(i) * step,
                            clip.hi()));
  }
  if (axis.back() < clip.hi()) axis.push_back(clip.hi());
  return axis;
}

}  // namespace

absl::StatusOr<DpRatioResult> MaxProbabilityRatio(const ClipConfig& clip,
                                                  double temperature,
                                                  std::size_t vocab_size,
                                                  double grid_step) {
  if (vocab_size < 1 || vocab_size > kMaxCheckVocabulary) {
    return absl::InvalidArgumentError(absl::StrCat(
        "vocab_size must be in [1, ", kMaxCheckVocabulary, "], got ",
        vocab_size));
  }
  if (!std::isfinite(grid_step) || grid_step <= 0) {
    return absl::InvalidArgumentError("grid_step must be finite and > 0");
  }
  if (!std::isfinite(temperature) || temperature <= 0) {
    return absl::InvalidArgumentError("temperature must be finite and > 0");
  }
  if (clip.width() / grid_step > 1e6) {
    return absl::ResourceExhaustedError("grid is too fine");
  }
  const std::vector<double> axis = GridAxis(clip, grid_step);
  const std::size_t g = axis.size();
  double vectors = 1;
  for (std::size_t i = 0; i < vocab_size; ++i) vectors *= static_cast<double>(g);
  if (vectors > static_cast<double>(kMaxCheckGridVectors)) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "grid of ", g, "^", vocab_size, " vectors exceeds the limit of ",
        kMaxCheckGridVectors));
  }

  // Since every pair of grid vectors is a neighboring pair, the largest
  // ratio for token t is max_u P(t|u) / min_v P(t|v).
  std::vector<double> max_p(vocab_size, 0.0);
  std::vector<double> min_p(vocab_size, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> digits(vocab_size, 0);
  std::vector<double> logits(vocab_size);
  const auto total = static_cast<std::size_t>(vectors);
  for (std::size_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < vocab_size; ++i) logits[i] = axis[digits[i]];
    const std::vector<double> p = SoftmaxProbabilities(logits, temperature);
    for (std::size_t t = 0; t < vocab_size; ++t) {
      max_p[t] = std::max(max_p[t], p[t]);
      min_p[t] = std::min(min_p[t], p[t]);
    }
    for (std::size_t i = 0; i < vocab_size; ++i) {
      if (++digits[i] < g) break;
      digits[i] = 0;
    }
  }

  DpRatioResult result;
  result.temperature = temperature;
  result.grid_points_per_axis = g;
  result.vectors = total;
  for (std::size_t t = 0; t < vocab_size; ++t) {
    if (min_p[t] <= 0) {
      return absl::OutOfRangeError(
          "probability underflow; temperature too small for an exact check");
    }
    result.max_ratio = std::max(result.max_ratio, max_p[t] / min_p[t]);
  }
  return result;
}

absl::StatusOr<DpRatioResult> DpRatioCheck(const ClipConfig& clip,
                                           PrivacyBudget budget,
                                           std::size_t vocab_size,
                                           double grid_step) {
  return MaxProbabilityRatio(clip, TemperatureFor(budget, clip), vocab_size,
                             grid_step);
}

}  // namespace dpgeom
