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

#include <random>

#include "dpgeom/dp_word/madlib.h"

namespace dpgeom {

Eigen::VectorXd SampleMetricNoise(std::size_t dim, PrivacyBudget budget,
                                  Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  std::normal_distribution<double> normal;
  Eigen::VectorXd direction(d);
  double norm = 0;
  do {
    for (Eigen::Index i = 0; i < d; ++i) direction[i] = normal(rng);
    norm = direction.norm();
  } while (norm == 0);
  direction /= norm;

  std::gamma_distribution<double> radius(static_cast<double>(dim),
                                         1.0 / budget.epsilon());
  return direction * radius(rng);
}

}  // namespace dpgeom
