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

#include "dpgeom/dp_sentence/logit_provider.h"

#include <cmath>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace dpgeom {
namespace {

constexpr absl::string_view kBpeWordStart = "\xC4\xA0";           // U+0120
constexpr absl::string_view kSentencePieceWordStart = "\xE2\x96\x81";  // U+2581

}  // namespace

absl::Status ValidateLogits(const LogitProvider& provider,
                            std::span<const double> logits) {
  if (logits.size() != provider.vocab().size()) {
    return absl::DataLossError(
        absl::StrCat("provider returned ", logits.size(), " logits for ",
                     provider.vocab().size(), " vocabulary tokens"));
  }
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i])) {
      return absl::DataLossError(
          absl::StrCat("provider returned non-finite logit at index ", i));
    }
  }
  return absl::OkStatus();
}

ProviderCapabilities SerializedProvider::capabilities() const {
  ProviderCapabilities caps = inner_.capabilities();
  caps.thread_safe = true;
  return caps;
}

absl::StatusOr<std::vector<double>> SerializedProvider::NextLogits(
    std::span<const TokenId> context) const {
  std::lock_guard<std::mutex> lock(mu_);
  return inner_.NextLogits(context);
}

absl::StatusOr<std::vector<double>> SerializedProvider::MaskedLogits(
    std::span<const TokenId> tokens, std::size_t position) const {
  std::lock_guard<std::mutex> lock(mu_);
  return inner_.MaskedLogits(tokens, position);
}

VocabularyIndex::VocabularyIndex(const std::vector<std::string>& vocab)
    : vocab_(vocab) {
  index_.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    // First occurrence wins if a remote vocabulary repeats a string.
    index_.emplace(vocab[i], static_cast<TokenId>(i));
  }
}

std::optional<TokenId> VocabularyIndex::Find(absl::string_view word) const {
  for (absl::string_view marker :
       {absl::string_view(), kBpeWordStart, kSentencePieceWordStart}) {
    auto it = index_.find(absl::StrCat(marker, word));
    if (it != index_.end()) return it->second;
  }
  return std::nullopt;
}

absl::StatusOr<std::vector<TokenId>> VocabularyIndex::Encode(
    std::span<const std::string> words) const {
  std::vector<TokenId> ids;
  ids.reserve(words.size());
  for (const std::string& word : words) {
    std::optional<TokenId> id = Find(word);
    if (!id.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("word '", word, "' is not in the provider vocabulary"));
    }
    ids.push_back(*id);
  }
  return ids;
}

std::vector<std::string> VocabularyIndex::Decode(
    std::span<const TokenId> ids) const {
  std::vector<std::string> words;
  words.reserve(ids.size());
  for (TokenId id : ids) {
    absl::string_view token = vocab_.at(static_cast<std::size_t>(id));
    for (absl::string_view marker : {kBpeWordStart, kSentencePieceWordStart}) {
      if (absl::StartsWith(token, marker) && token.size() > marker.size()) {
        token.remove_prefix(marker.size());
        break;
      }
    }
    words.emplace_back(token);
  }
  return words;
}

}  // namespace dpgeom
