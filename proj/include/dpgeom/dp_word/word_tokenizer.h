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

#ifndef DPGEOM_DP_WORD_WORD_TOKENIZER_H_
#define DPGEOM_DP_WORD_WORD_TOKENIZER_H_

#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

namespace dpgeom {

// Splits on whitespace and detaches ASCII punctuation into one-character
// tokens. Apostrophes and hyphens between two word characters stay inside the
// word ("don't", "well-known"). Bytes >= 0x80 count as word characters.
std::vector<std::string> SplitWords(absl::string_view text);

// Joins with single spaces.
std::string JoinWords(std::span<const std::string> words);

}  // namespace dpgeom

#endif  // DPGEOM_DP_WORD_WORD_TOKENIZER_H_
