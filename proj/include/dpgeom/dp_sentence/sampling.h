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

// Temperature sampling over clipped logits, viewed as the exponential
// mechanism.
//
// Clipping every logit into [lo, hi] bounds the sensitivity of the score at
// width = hi - lo. Sampling token i with probability proportional to
// exp(l_i / T) at T = 2 * width / epsilon is then the exponential mechanism
// with privacy parameter epsilon for that one draw.

#ifndef DPGEOM_DP_SENTENCE_SAMPLING_H_
#define DPGEOM_DP_SENTENCE_SAMPLING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/common/privacy_budget.h"
#include "dpgeom/common/random.h"

namespace dpgeom {

class ClipConfig {
 public:
  static absl::StatusOr<ClipConfig> Create(double lo, double hi);
  // [-5, 5].
  static ClipConfig Default() { return ClipConfig(-5.0, 5.0); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  // Sensitivity of a clipped logit.
  double width() const { return hi_ - lo_; }

 private:
  ClipConfig(double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo_;
  double hi_;
};

// Element-wise clamp into [lo, hi]. Fails on non-finite input.
absl::StatusOr<std::vector<double>> ClipLogits(std::span<const double> logits,
                                               const ClipConfig& clip);

// 2 * width / epsilon.
double TemperatureFor(PrivacyBudget budget, const ClipConfig& clip);

// softmax(logits / temperature) with the maximum subtracted first. The full
// support is kept: no top-k or nucleus truncation.
std::vector<double> SoftmaxProbabilities(std::span<const double> logits,
                                         double temperature);

// Draws one index from softmax(logits / temperature). Consumes exactly one
// uniform variate from `rng` per call.
absl::StatusOr<std::size_t> SampleToken(std::span<const double> logits,
                                        double temperature, Rng& rng);

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_SAMPLING_H_
