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

#include "dpgeom/dp_sentence/toy_bigram_provider.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace dpgeom {

absl::StatusOr<std::unique_ptr<ToyBigramProvider>> ToyBigramProvider::Create(
    const std::vector<std::vector<std::string>>& corpus,
    std::string stop_token) {
  std::size_t words = 0;
  for (const auto& sentence : corpus) words += sentence.size();
  if (words == 0) return absl::InvalidArgumentError("empty corpus");

  std::unique_ptr<ToyBigramProvider> provider(new ToyBigramProvider());
  absl::flat_hash_map<std::string, TokenId> ids;
  for (const auto& sentence : corpus) {
    for (const std::string& word : sentence) {
      if (word == stop_token) {
        return absl::InvalidArgumentError(
            absl::StrCat("corpus contains the stop token '", stop_token, "'"));
      }
      if (ids.emplace(word, static_cast<TokenId>(provider->vocab_.size()))
              .second) {
        provider->vocab_.push_back(word);
      }
    }
  }
  provider->stop_ = static_cast<TokenId>(provider->vocab_.size());
  provider->vocab_.push_back(std::move(stop_token));

  // Ordered map keeps edge lists sorted by id for reproducible iteration.
  std::map<std::pair<TokenId, TokenId>, std::int64_t> counts;
  for (const auto& sentence : corpus) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const TokenId a = ids.at(sentence[i]);
      const TokenId b =
          i + 1 < sentence.size() ? ids.at(sentence[i + 1]) : provider->stop_;
      ++counts[{a, b}];
    }
  }
  const std::size_t v = provider->vocab_.size();
  provider->successors_.resize(v);
  provider->predecessors_.resize(v);
  for (const auto& [edge, count] : counts) {
    provider->successors_[edge.first].emplace_back(edge.second, count);
    provider->predecessors_[edge.second].emplace_back(edge.first, count);
  }
  return provider;
}

absl::Status ToyBigramProvider::CheckId(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= vocab_.size()) {
    return absl::InvalidArgumentError(absl::StrCat("token id ", id,
                                                   " out of range"));
  }
  return absl::OkStatus();
}

std::int64_t ToyBigramProvider::BigramCount(TokenId first,
                                            TokenId second) const {
  if (!CheckId(first).ok() || !CheckId(second).ok()) return 0;
  for (const auto& [id, count] : successors_[first]) {
    if (id == second) return count;
  }
  return 0;
}

absl::StatusOr<std::vector<double>> ToyBigramProvider::NextLogits(
    std::span<const TokenId> context) const {
  std::vector<double> logits(vocab_.size(), 0.0);
  if (context.empty()) return logits;
  const TokenId last = context.back();
  if (absl::Status s = CheckId(last); !s.ok()) return s;
  for (const auto& [id, count] : successors_[last]) {
    logits[id] = std::log(static_cast<double>(count) + 1);
  }
  return logits;
}

absl::StatusOr<std::vector<double>> ToyBigramProvider::MaskedLogits(
    std::span<const TokenId> tokens, std::size_t position) const {
  if (position >= tokens.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mask position ", position, " outside sequence of ", tokens.size()));
  }
  for (TokenId id : tokens) {
    if (absl::Status s = CheckId(id); !s.ok()) return s;
  }
  std::vector<double> logits(vocab_.size(), 0.0);
  if (position > 0) {
    for (const auto& [id, count] : successors_[tokens[position - 1]]) {
      logits[id] += std::log(static_cast<double>(count) + 1);
    }
  }
  if (position + 1 < tokens.size()) {
    for (const auto& [id, count] : predecessors_[tokens[position + 1]]) {
      logits[id] += std::log(static_cast<double>(count) + 1);
    }
  }
  return logits;
}

absl::StatusOr<std::vector<std::vector<std::string>>> ReadCorpus(
    std::istream& in) {
  std::vector<std::vector<std::string>> corpus;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> words =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (!words.empty()) corpus.push_back(std::move(words));
  }
  return corpus;
}

absl::StatusOr<std::vector<std::vector<std::string>>> LoadCorpus(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ReadCorpus(in);
}

}  // namespace dpgeom
