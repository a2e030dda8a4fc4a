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

#include "dpgeom/harness/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_replace.h"
#include "dpgeom/common/format.h"

namespace dpgeom {
namespace {

struct Accumulator {
  std::size_t n = 0;
  double mean = 0;
  double m2 = 0;
  double abs_sum = 0;
  double eps_total_sum = 0;
};

// Metadata values are free text; keep each on one line.
std::string OneLine(absl::string_view text) {
  return absl::StrReplaceAll(text, {{"\n", " "}, {"\r", " "}});
}

std::string XmlEscape(absl::string_view text) {
  return absl::StrReplaceAll(text, {{"&", "&amp;"},
                                    {"<", "&lt;"},
                                    {">", "&gt;"},
                                    {"\"", "&quot;"}});
}

absl::string_view SeriesColor(Mechanism m) {
  switch (m) {
    case Mechanism::kMadlib:
      return "#d62728";
    case Mechanism::kCausal:
      return "#1f77b4";
    case Mechanism::kMlm:
      return "#2ca02c";
  }
  return "#000000";
}

}  // namespace

absl::StatusOr<Report> Aggregate(std::span<const ShiftRow> rows,
                                 std::optional<BaselineStats> baseline) {
  if (rows.empty()) {
    return absl::InvalidArgumentError("cannot aggregate an empty row set");
  }
  std::map<std::pair<absl::string_view, double>, Accumulator> cells;
  for (const ShiftRow& row : rows) {
    Accumulator& acc = cells[{MechanismName(row.mechanism), row.epsilon}];
    ++acc.n;
    const double delta = row.shift - acc.mean;
    acc.mean += delta / static_cast<double>(acc.n);
    acc.m2 += delta * (row.shift - acc.mean);
    acc.abs_sum += std::abs(row.shift);
    acc.eps_total_sum += row.epsilon * static_cast<double>(row.privacy_steps);
  }
  Report report;
  report.rows.assign(rows.begin(), rows.end());
  report.baseline = baseline;
  for (const auto& [key, acc] : cells) {
    CellSummary cell;
    cell.mechanism = ParseMechanism(key.first).value();
    cell.epsilon = key.second;
    cell.count = acc.n;
    cell.mean_shift = acc.mean;
    cell.std_shift = std::sqrt(std::max(0.0, acc.m2 / acc.n));
    cell.mean_abs_shift = acc.abs_sum / acc.n;
    cell.mean_epsilon_total = acc.eps_total_sum / acc.n;
    report.cells.push_back(cell);
  }
  return report;
}

std::string RenderCsv(const Report& report) {
  std::string out;
  for (const auto& [key, value] : report.metadata) {
    absl::StrAppend(&out, "# ", key, "=", OneLine(value), "\n");
  }
  absl::StrAppend(&out, "# rows=", report.rows.size(), "\n");
  absl::StrAppend(&out, "# skipped=", report.skipped, "\n");
  absl::StrAppend(
      &out,
      "mechanism,epsilon,trial,sentence_id,id_reference,id_transformed,shift\n");
  for (const ShiftRow& r : report.rows) {
    absl::StrAppend(&out, MechanismName(r.mechanism), ",",
                    FormatDouble(r.epsilon), ",", r.trial, ",", r.sentence_id,
                    ",", FormatDouble(r.id_reference), ",",
                    FormatDouble(r.id_transformed), ",",
                    FormatDouble(r.shift), "\n");
  }
  absl::StrAppend(&out,
                  "\nmechanism,epsilon,count,mean_shift,std_shift,"
                  "mean_abs_shift,mean_epsilon_total\n");
  for (const CellSummary& c : report.cells) {
    absl::StrAppend(&out, MechanismName(c.mechanism), ",",
                    FormatDouble(c.epsilon), ",", c.count, ",",
                    FormatDouble(c.mean_shift), ",", FormatDouble(c.std_shift),
                    ",", FormatDouble(c.mean_abs_shift), ",",
                    FormatDouble(c.mean_epsilon_total), "\n");
  }
  if (report.baseline.has_value()) {
    const BaselineStats& b = *report.baseline;
    absl::StrAppend(&out,
                    "\nbaseline_mean_shift,baseline_std_shift,"
                    "baseline_mean_abs_shift,baseline_count,baseline_skipped\n",
                    FormatDouble(b.mean), ",", FormatDouble(b.std), ",",
                    FormatDouble(b.mean_abs), ",", b.count, ",", b.skipped,
                    "\n");
  }
  return out;
}

std::string RenderSvg(const Report& report) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  std::vector<double> epsilons;
  double y_lo = 0, y_hi = 0;
  for (const CellSummary& c : report.cells) {
    epsilons.push_back(c.epsilon);
    y_lo = std::min(y_lo, c.mean_shift);
    y_hi = std::max(y_hi, c.mean_shift);
  }
  const double baseline = report.baseline ? report.baseline->mean : 0.0;
  y_lo = std::min(y_lo, baseline);
  y_hi = std::max(y_hi, baseline);
  if (y_hi - y_lo < 1e-12) {
    y_lo -= 1;
    y_hi += 1;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;
  std::sort(epsilons.begin(), epsilons.end());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()),
                 epsilons.end());
  const double x_lo = epsilons.empty() ? 0 : epsilons.front();
  const double x_hi = epsilons.empty() ? 1 : epsilons.back();

  auto px = [&](double eps) {
    if (x_hi - x_lo < 1e-12) return kLeft + plot_w / 2;
    return kLeft + plot_w * (eps - x_lo) / (x_hi - x_lo);
  };
  auto py = [&](double v) {
    return kTop + plot_h * (y_hi - v) / (y_hi - y_lo);
  };

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
      "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
      kWidth, kHeight, kWidth, kHeight);
  absl::StrAppendFormat(&svg,
                        "<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" "
                        "fill=\"white\"/>\n",
                        kWidth, kHeight);
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.2f\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      "font-size=\"14\">Intrinsic-dimension shift by privacy budget</text>\n",
      kLeft + plot_w / 2);
  absl::StrAppendFormat(
      &svg,
      "<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop + plot_h, kLeft + plot_w, kTop + plot_h);
  absl::StrAppendFormat(
      &svg,
      "<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop, kLeft, kTop + plot_h);
  for (double eps : epsilons) {
    absl::StrAppendFormat(
        &svg,
        "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
        px(eps), kTop + plot_h + 16, FormatDouble(eps));
  }
  constexpr int kYTicks = 5;
  for (int i = 0; i <= kYTicks; ++i) {
    const double v = y_lo + (y_hi - y_lo) * i / kYTicks;
    absl::StrAppendFormat(
        &svg,
        "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" "
        "font-family=\"sans-serif\" font-size=\"11\">%.3g</text>\n",
        kLeft - 6, py(v) + 4, v);
  }
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"12\">epsilon</text>\n",
      kLeft + plot_w / 2, kHeight - 12);
  absl::StrAppendFormat(
      &svg,
      "<text x=\"16\" y=\"%.2f\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"12\" "
      "transform=\"rotate(-90 16 %.2f)\">mean ID shift</text>\n",
      kTop + plot_h / 2, kTop + plot_h / 2);

  absl::StrAppendFormat(
      &svg,
      "<line class=\"baseline\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
      "y2=\"%.2f\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n",
      kLeft, py(baseline), kLeft + plot_w, py(baseline));
  absl::StrAppendFormat(
      &svg,
      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
      "font-size=\"11\" fill=\"gray\">%s</text>\n",
      kLeft + plot_w + 6, py(baseline) + 4,
      report.baseline ? absl::StrFormat("baseline %.3g", baseline)
                      : std::string("no baseline"));

  int legend_row = 0;
  for (Mechanism m : {Mechanism::kCausal, Mechanism::kMadlib, Mechanism::kMlm}) {
    std::string points;
    std::string markers;
    for (const CellSummary& c : report.cells) {
      if (c.mechanism != m) continue;
      absl::StrAppendFormat(&points, "%s%.2f,%.2f", points.empty() ? "" : " ",
                            px(c.epsilon), py(c.mean_shift));
      absl::StrAppendFormat(&markers,
                            "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" "
                            "fill=\"%s\"/>\n",
                            px(c.epsilon), py(c.mean_shift), SeriesColor(m));
    }
    if (points.empty()) continue;
    absl::StrAppendFormat(&svg,
                          "<polyline class=\"series\" data-mechanism=\"%s\" "
                          "points=\"%s\" fill=\"none\" stroke=\"%s\" "
                          "stroke-width=\"2\"/>\n",
                          MechanismName(m), points, SeriesColor(m));
    svg += markers;
    const double ly = kTop + 20.0 * legend_row++;
    absl::StrAppendFormat(
        &svg,
        "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
        "stroke-width=\"2\"/>\n",
        kLeft + plot_w + 6, ly + 40, kLeft + plot_w + 26, ly + 40,
        SeriesColor(m));
    absl::StrAppendFormat(&svg,
                          "<text x=\"%.2f\" y=\"%.2f\" "
                          "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
                          kLeft + plot_w + 30, ly + 44,
                          XmlEscape(MechanismName(m)));
  }
  svg += "</svg>\n";
  return svg;
}

absl::StatusOr<ReportFormat> ParseReportFormat(absl::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "svg") return ReportFormat::kSvg;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown report format '", name, "'; expected csv or svg"));
}

absl::Status Emit(const Report& report, ReportFormat format,
                  const std::string& path) {
  if (report.rows.empty() || report.cells.empty()) {
    return absl::InvalidArgumentError("cannot emit an empty report");
  }
  const std::string body =
      format == ReportFormat::kCsv ? RenderCsv(report) : RenderSvg(report);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path, " for writing"));
  }
  out << body;
  out.close();
  if (!out) {
    return absl::InternalError(absl::StrCat("failed writing ", path));
  }
  return absl::OkStatus();
}

}  // namespace dpgeom
