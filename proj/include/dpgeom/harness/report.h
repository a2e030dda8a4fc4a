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

#ifndef DPGEOM_HARNESS_REPORT_H_
#define DPGEOM_HARNESS_REPORT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpgeom/harness/experiment.h"

namespace dpgeom {

// Summary of one (mechanism, epsilon) cell.
struct CellSummary {
  Mechanism mechanism = Mechanism::kMadlib;
  double epsilon = 0;
  std::size_t count = 0;  // > 0
  double mean_shift = 0;
  double std_shift = 0;  // population
  double mean_abs_shift = 0;
  // Naive sequential composition: epsilon * privacy_steps, averaged.
  double mean_epsilon_total = 0;
};

struct Report {
  ConfigEcho metadata;
  std::vector<ShiftRow> rows;
  std::vector<CellSummary> cells;  // sorted by (mechanism name, epsilon)
  std::optional<BaselineStats> baseline;
  std::size_t skipped = 0;
};

// Fails on empty input.
absl::StatusOr<Report> Aggregate(std::span<const ShiftRow> rows,
                                 std::optional<BaselineStats> baseline =
                                     std::nullopt);

// Sections, in order: "# key=value" metadata lines; the row table with
// header mechanism,epsilon,trial,sentence_id,id_reference,id_transformed,shift;
// a blank line and the aggregate table; a blank line and the baseline table.
std::string RenderCsv(const Report& report);

// Line plot of mean shift against epsilon, one series per mechanism, with a
// single horizontal rule for the baseline (at zero when there is none).
std::string RenderSvg(const Report& report);

enum class ReportFormat { kCsv, kSvg };

absl::StatusOr<ReportFormat> ParseReportFormat(absl::string_view name);

absl::Status Emit(const Report& report, ReportFormat format,
                  const std::string& path);

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_REPORT_H_
