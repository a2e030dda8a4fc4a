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

#ifndef DPGEOM_HARNESS_SENTENCE_PAIRS_H_
#define DPGEOM_HARNESS_SENTENCE_PAIRS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace dpgeom {

// A reference sentence and its human-written paraphrase.
struct SentencePair {
  std::string id;             // id of the reference (first) sentence
  std::string paraphrase_id;  // id of the paraphrase (second) sentence
  std::string reference;
  std::string paraphrase;
  bool equivalent = false;
};

// Reads an MRPC-format file: a header row, then tab-separated rows of
// quality, id1, id2, string1, string2. Only rows with quality 1 are kept.
// A row with the wrong column count, an unparsable quality or an empty
// sentence in an equivalent pair is an error naming its line.
absl::StatusOr<std::vector<SentencePair>> ReadPairs(std::istream& in);
absl::StatusOr<std::vector<SentencePair>> LoadPairs(const std::string& path);

// Writes pairs back out in the same format (all with quality 1).
void WritePairs(const std::vector<SentencePair>& pairs, std::ostream& out);

}  // namespace dpgeom

#endif  // DPGEOM_HARNESS_SENTENCE_PAIRS_H_
