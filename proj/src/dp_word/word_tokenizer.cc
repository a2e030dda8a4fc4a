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

#include "dpgeom/dp_word/word_tokenizer.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_join.h"

namespace dpgeom {
namespace {

bool IsWordChar(unsigned char c) {
  return c >= 0x80 || absl::ascii_isalnum(c);
}

}  // namespace

std::vector<std::string> SplitWords(absl::string_view text) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (absl::ascii_isspace(c)) {
      flush();
    } else if (IsWordChar(c)) {
      current.push_back(static_cast<char>(c));
    } else if ((c == '\'' || c == '-') && !current.empty() &&
               i + 1 < text.size() &&
               IsWordChar(static_cast<unsigned char>(text[i + 1]))) {
      current.push_back(static_cast<char>(c));
    } else {
      flush();
      words.emplace_back(1, static_cast<char>(c));
    }
  }
  flush();
  return words;
}

std::string JoinWords(std::span<const std::string> words) {
  return absl::StrJoin(words, " ");
}

}  // namespace dpgeom
