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

#include "dpgeom/dp_sentence/sampling.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"

namespace dpgeom {

absl::StatusOr<ClipConfig> ClipConfig::Create(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    return absl::InvalidArgumentError(
        absl::StrCat("clip range needs finite lo < hi, got [", lo, ", ", hi,
                     "]"));
  }
  return ClipConfig(lo, hi);
}

absl::StatusOr<std::vector<double>> ClipLogits(std::span<const double> logits,
                                               const ClipConfig& clip) {
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite logit at index ", i));
    }
    out[i] = std::clamp(logits[i], clip.lo(), clip.hi());
  }
  return out;
}

double TemperatureFor(PrivacyBudget budget, const ClipConfig& clip) {
  return 2.0 * clip.width() / budget.epsilon();
}

std::vector<double> SoftmaxProbabilities(std::span<const double> logits,
                                         double temperature) {
  std::vector<double> p(logits.size());
  if (logits.empty()) return p;
  const double max = *std::max_element(logits.begin(), logits.end());
  double total = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp((logits[i] - max) / temperature);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

absl::StatusOr<std::size_t> SampleToken(std::span<const double> logits,
                                        double temperature, Rng& rng) {
  if (logits.empty()) return absl::InvalidArgumentError("no logits to sample");
  if (!std::isfinite(temperature) || temperature <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("temperature must be finite and > 0, got ", temperature));
  }
  const double max = *std::max_element(logits.begin(), logits.end());
  if (!std::isfinite(max)) {
    return absl::InvalidArgumentError("non-finite logit");
  }
  std::vector<double> weights(logits.size());
  double total = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite logit at index ", i));
    }
    weights[i] = std::exp((logits[i] - max) / temperature);
    total += weights[i];
  }
  // The maximum contributes exp(0) = 1, so total >= 1.
  const double target = std::uniform_real_distribution<double>(0, 1)(rng) * total;
  double cumulative = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (target < cumulative) return i;
  }
  // Rounding can leave target == cumulative at the very end.
  return last_positive;
}

}  // namespace dpgeom
