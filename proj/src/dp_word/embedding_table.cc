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

#include "dpgeom/dp_word/embedding_table.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"

namespace dpgeom {
namespace {

bool IsCountHeader(const std::vector<absl::string_view>& fields) {
  std::size_t a = 0, b = 0;
  return fields.size() == 2 && absl::SimpleAtoi(fields[0], &a) &&
         absl::SimpleAtoi(fields[1], &b) && a > 0 && b > 0;
}

}  // namespace

absl::StatusOr<EmbeddingTable> EmbeddingTable::Create(
    std::vector<std::string> tokens, Matrix vectors) {
  if (tokens.size() < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "embedding table needs at least 2 tokens, got ", tokens.size()));
  }
  if (static_cast<std::size_t>(vectors.rows()) != tokens.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(tokens.size(), " tokens but ", vectors.rows(), " rows"));
  }
  if (vectors.cols() < 1) {
    return absl::InvalidArgumentError("embedding dimension must be >= 1");
  }
  if (!vectors.allFinite()) {
    return absl::InvalidArgumentError("embedding table has non-finite values");
  }
  absl::flat_hash_map<std::string, std::size_t> index;
  index.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!index.emplace(tokens[i], i).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate token '", tokens[i], "'"));
    }
  }
  return EmbeddingTable(std::move(tokens), std::move(vectors),
                        std::move(index));
}

std::optional<std::size_t> EmbeddingTable::Find(absl::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<EmbeddingTable> ReadEmbeddingTable(std::istream& in) {
  std::vector<std::string> tokens;
  std::vector<double> values;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (fields.empty()) continue;
    if (first_content_line) {
      first_content_line = false;
      if (IsCountHeader(fields)) continue;
    }
    if (fields.size() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": token without a vector"));
    }
    const std::size_t row_dim = fields.size() - 1;
    if (dim == 0) dim = row_dim;
    if (row_dim != dim) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": dimension ", row_dim,
                       " differs from ", dim));
    }
    tokens.emplace_back(fields[0]);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      double v = 0;
      if (!absl::SimpleAtod(fields[c], &v) || !std::isfinite(v)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": cannot parse number '", fields[c], "'"));
      }
      values.push_back(v);
    }
  }
  const auto rows = static_cast<Eigen::Index>(tokens.size());
  Matrix vectors(rows, static_cast<Eigen::Index>(dim));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
      vectors(r, c) = values[static_cast<std::size_t>(r * vectors.cols() + c)];
    }
  }
  return EmbeddingTable::Create(std::move(tokens), std::move(vectors));
}

absl::StatusOr<EmbeddingTable> LoadEmbeddingTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto table = ReadEmbeddingTable(in);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        absl::StrCat(path, ": ", table.status().message()));
  }
  return table;
}

void WriteEmbeddingTable(const EmbeddingTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string line = table.token(i);
    for (double v : table.vector(i)) absl::StrAppendFormat(&line, " %.17g", v);
    out << line << '\n';
  }
}

}  // namespace dpgeom
