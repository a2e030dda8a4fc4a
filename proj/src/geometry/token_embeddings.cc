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

#include "dpgeom/geometry/token_embeddings.h"

#include <fstream>
#include <istream>
#include <optional>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"

namespace dpgeom {
namespace {

using nlohmann::json;

absl::Status LineError(std::size_t line, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("embeddings line ", line, ": ", what));
}

absl::StatusOr<EmbeddedText> ParseRecord(const json& record, std::size_t line,
                                         std::optional<Eigen::Index>& dim) {
  if (!record.is_object()) return LineError(line, "record is not an object");
  for (const char* key : {"id", "tokens", "vectors", "special"}) {
    if (!record.contains(key)) {
      return LineError(line, absl::StrCat("missing field '", key, "'"));
    }
  }
  const json& tokens = record["tokens"];
  const json& vectors = record["vectors"];
  const json& special = record["special"];
  if (!record["id"].is_string() || !tokens.is_array() ||
      !vectors.is_array() || !special.is_array()) {
    return LineError(line, "field has the wrong JSON type");
  }
  if (tokens.size() != vectors.size() || tokens.size() != special.size()) {
    return LineError(line, absl::StrCat(tokens.size(), " tokens, ",
                                        vectors.size(), " vectors, ",
                                        special.size(), " special flags"));
  }

  EmbeddedText text;
  text.id = record["id"].get<std::string>();
  const auto n = static_cast<Eigen::Index>(tokens.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = vectors[i];
    if (!row.is_array() || row.empty()) {
      return LineError(line, absl::StrCat("vector ", i, " is not a list"));
    }
    const auto d = static_cast<Eigen::Index>(row.size());
    if (!dim.has_value()) dim = d;
    if (d != *dim) {
      return LineError(line, absl::StrCat("vector ", i, " has dimension ", d,
                                          ", expected ", *dim));
    }
    if (i == 0) text.vectors.resize(n, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      if (!row[c].is_number()) {
        return LineError(line, absl::StrCat("vector ", i, " has a non-number"));
      }
      text.vectors(i, c) = row[c].get<double>();
    }
    if (!tokens[i].is_string() || !special[i].is_boolean()) {
      return LineError(line, absl::StrCat("token ", i, " is malformed"));
    }
    text.tokens.push_back(tokens[i].get<std::string>());
    text.special.push_back(special[i].get<bool>());
  }
  if (n == 0) text.vectors.resize(0, dim.value_or(0));
  if (!text.vectors.allFinite()) {
    return LineError(line, "non-finite coordinate");
  }
  return text;
}

}  // namespace

absl::StatusOr<std::vector<EmbeddedText>> ReadTokenEmbeddings(
    std::istream& in) {
  std::vector<EmbeddedText> texts;
  std::optional<Eigen::Index> dim;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded()) return LineError(line_no, "invalid JSON");
    auto text = ParseRecord(record, line_no, dim);
    if (!text.ok()) return text.status();
    texts.push_back(*std::move(text));
  }
  return texts;
}

absl::StatusOr<std::vector<EmbeddedText>> LoadTokenEmbeddings(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ReadTokenEmbeddings(in);
}

std::string ToJsonLine(const EmbeddedText& text) {
  std::string out = absl::StrCat("{\"id\":", json(text.id).dump(),
                                 ",\"tokens\":", json(text.tokens).dump(),
                                 ",\"vectors\":[");
  for (Eigen::Index i = 0; i < text.vectors.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (Eigen::Index c = 0; c < text.vectors.cols(); ++c) {
      if (c > 0) out += ',';
      absl::StrAppendFormat(&out, "%.17g", text.vectors(i, c));
    }
    out += ']';
  }
  out += "],\"special\":[";
  for (std::size_t i = 0; i < text.special.size(); ++i) {
    if (i > 0) out += ',';
    out += text.special[i] ? "true" : "false";
  }
  out += "]}";
  return out;
}

absl::StatusOr<std::optional<PointCloud>> BuildPointCloud(
    const EmbeddedText& text, const FilterConfig& cfg) {
  return BuildPointCloud(text.tokens, text.vectors, text.special, cfg,
                         text.id);
}

}  // namespace dpgeom
