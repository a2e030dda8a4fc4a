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

#ifndef DPGEOM_COMMON_PRIVACY_BUDGET_H_
#define DPGEOM_COMMON_PRIVACY_BUDGET_H_

#include <cmath>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace dpgeom {

// Privacy budget epsilon. Always finite and strictly positive.
//
// For word-level rewriting it is the per-word metric-DP parameter; for
// sentence-level rewriting it is spent once per sampled token.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "epsilon must be finite and strictly positive, got ", epsilon));
    }
    return PrivacyBudget(epsilon);
  }

  double epsilon() const { return epsilon_; }

  friend bool operator==(PrivacyBudget a, PrivacyBudget b) = default;

 private:
  explicit PrivacyBudget(double epsilon) : epsilon_(epsilon) {}

  double epsilon_;
};

}  // namespace dpgeom

#endif  // DPGEOM_COMMON_PRIVACY_BUDGET_H_
