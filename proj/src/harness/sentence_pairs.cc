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

#include "dpgeom/harness/sentence_pairs.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace dpgeom {
namespace {

constexpr absl::string_view kUtf8Bom = "\xEF\xBB\xBF";
constexpr std::size_t kColumns = 5;

absl::Status RowError(std::size_t line, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("pairs line ", line, ": ", what));
}

}  // namespace

absl::StatusOr<std::vector<SentencePair>> ReadPairs(std::istream& in) {
  std::vector<SentencePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && absl::StartsWith(line, kUtf8Bom)) {
      line.erase(0, kUtf8Bom.size());
    }
    if (line.empty()) continue;
    std::vector<std::string> fields = absl::StrSplit(line, '\t');
    if (fields.size() != kColumns) {
      return RowError(line_no, absl::StrCat("expected ", kColumns,
                                            " tab-separated columns, got ",
                                            fields.size()));
    }
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    int quality = 0;
    if (!absl::SimpleAtoi(fields[0], &quality) ||
        (quality != 0 && quality != 1)) {
      return RowError(line_no,
                      absl::StrCat("quality must be 0 or 1, got '", fields[0],
                                   "'"));
    }
    if (quality != 1) continue;
    SentencePair pair;
    pair.id = std::string(absl::StripAsciiWhitespace(fields[1]));
    pair.paraphrase_id = std::string(absl::StripAsciiWhitespace(fields[2]));
    pair.reference = std::string(absl::StripAsciiWhitespace(fields[3]));
    pair.paraphrase = std::string(absl::StripAsciiWhitespace(fields[4]));
    pair.equivalent = true;
    if (pair.reference.empty() || pair.paraphrase.empty()) {
      return RowError(line_no, "equivalent pair with an empty sentence");
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

absl::StatusOr<std::vector<SentencePair>> LoadPairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto pairs = ReadPairs(in);
  if (!pairs.ok()) {
    return absl::Status(pairs.status().code(),
                        absl::StrCat(path, ": ", pairs.status().message()));
  }
  return pairs;
}

void WritePairs(const std::vector<SentencePair>& pairs, std::ostream& out) {
  out << "Quality\t#1 ID\t#2 ID\t#1 String\t#2 String\n";
  for (const SentencePair& p : pairs) {
    out << (p.equivalent ? 1 : 0) << '\t' << p.id << '\t' << p.paraphrase_id
        << '\t' << p.reference << '\t' << p.paraphrase << '\n';
  }
}

}  // namespace dpgeom
