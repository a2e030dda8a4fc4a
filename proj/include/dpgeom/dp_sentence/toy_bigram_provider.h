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

#ifndef DPGEOM_DP_SENTENCE_TOY_BIGRAM_PROVIDER_H_
#define DPGEOM_DP_SENTENCE_TOY_BIGRAM_PROVIDER_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/dp_sentence/logit_provider.h"

namespace dpgeom {

inline constexpr char kDefaultStopToken[] = "</s>";

// Deterministic bigram scorer, a desk-scale stand-in for a pretrained model.
//
// The vocabulary is the corpus words in first-seen order followed by the stop
// token. Every sequence implicitly ends with the stop token.
//
//   NextLogits(context)[w]      = ln(count(last, w) + 1)
//   MaskedLogits(tokens, p)[w]  = ln(count(left, w) + 1) + ln(count(w, right) + 1)
//
// where `last` is the final context token and left/right are the neighbors
// of p (a missing neighbor contributes 0). An empty or unseen context gives
// all-zero, i.e. uniform, logits. Immutable after construction, so queries
// are thread-safe.
class ToyBigramProvider : public LogitProvider {
 public:
  static absl::StatusOr<std::unique_ptr<ToyBigramProvider>> Create(
      const std::vector<std::vector<std::string>>& corpus,
      std::string stop_token = kDefaultStopToken);

  const std::vector<std::string>& vocab() const override { return vocab_; }
  ProviderCapabilities capabilities() const override {
    return {.causal = true, .masked = true, .thread_safe = true};
  }
  absl::StatusOr<std::vector<double>> NextLogits(
      std::span<const TokenId> context) const override;
  absl::StatusOr<std::vector<double>> MaskedLogits(
      std::span<const TokenId> tokens, std::size_t position) const override;
  std::optional<TokenId> stop_token() const override { return stop_; }

  std::int64_t BigramCount(TokenId first, TokenId second) const;

 private:
  using Edge = std::pair<TokenId, std::int64_t>;

  ToyBigramProvider() = default;
  absl::Status CheckId(TokenId id) const;

  std::vector<std::string> vocab_;
  TokenId stop_ = 0;
  std::vector<std::vector<Edge>> successors_;    // first -> (second, count)
  std::vector<std::vector<Edge>> predecessors_;  // second -> (first, count)
};

// One sentence per line, whitespace-separated words.
absl::StatusOr<std::vector<std::vector<std::string>>> ReadCorpus(
    std::istream& in);
absl::StatusOr<std::vector<std::vector<std::string>>> LoadCorpus(
    const std::string& path);

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_TOY_BIGRAM_PROVIDER_H_
