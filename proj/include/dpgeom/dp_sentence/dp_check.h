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

#ifndef DPGEOM_DP_SENTENCE_DP_CHECK_H_
#define DPGEOM_DP_SENTENCE_DP_CHECK_H_

#include <cstddef>

#include "absl/status/statusor.h"
#include "dpgeom/common/privacy_budget.h"
#include "dpgeom/dp_sentence/sampling.h"

namespace dpgeom {

inline constexpr std::size_t kMaxCheckVocabulary = 10;
inline constexpr std::size_t kMaxCheckGridVectors = 5'000'000;

struct DpRatioResult {
  double max_ratio = 1;
  double temperature = 0;
  std::size_t grid_points_per_axis = 0;
  std::size_t vectors = 0;  // grid_points_per_axis ^ vocab_size
};

// Exhaustive check of the softmax probability ratio on clipped logits.
//
// Every logit vector on the grid {lo, lo + step, ..., hi}^V is a valid
// clipped output, and any two of them differ by at most width in every
// coordinate, so every pair is a neighboring pair. Returns the largest
// P(t | u) / P(t | v) over all grid vectors u, v and tokens t at the given
// temperature. The endpoint hi is always on the grid.
absl::StatusOr<DpRatioResult> MaxProbabilityRatio(const ClipConfig& clip,
                                                  double temperature,
                                                  std::size_t vocab_size,
                                                  double grid_step);

// MaxProbabilityRatio at T = TemperatureFor(budget, clip). The exponential
// mechanism guarantees max_ratio <= exp(epsilon).
absl::StatusOr<DpRatioResult> DpRatioCheck(const ClipConfig& clip,
                                           PrivacyBudget budget,
                                           std::size_t vocab_size,
                                           double grid_step);

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_DP_CHECK_H_
