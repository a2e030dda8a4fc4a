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

#ifndef DPGEOM_DP_SENTENCE_LOGIT_PROVIDER_H_
#define DPGEOM_DP_SENTENCE_LOGIT_PROVIDER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpgeom {

using TokenId = std::int32_t;

struct ProviderCapabilities {
  bool causal = false;
  bool masked = false;
  // False means callers must not issue concurrent queries.
  bool thread_safe = false;
};

// Scores every vocabulary token in a context. Implementations return raw
// logits; clipping, temperature and sampling all happen in the rewriters.
class LogitProvider {
 public:
  virtual ~LogitProvider() = default;

  virtual const std::vector<std::string>& vocab() const = 0;
  virtual ProviderCapabilities capabilities() const = 0;

  // Logits for the token following `context`.
  virtual absl::StatusOr<std::vector<double>> NextLogits(
      std::span<const TokenId> context) const = 0;

  // Logits for `tokens[position]` with that position masked and every other
  // position visible.
  virtual absl::StatusOr<std::vector<double>> MaskedLogits(
      std::span<const TokenId> tokens, std::size_t position) const = 0;

  // End-of-sequence token, if the provider has one.
  virtual std::optional<TokenId> stop_token() const { return std::nullopt; }
};

// Checks the provider contract on a returned vector: one finite entry per
// vocabulary token.
absl::Status ValidateLogits(const LogitProvider& provider,
                            std::span<const double> logits);

// Wraps a provider that is not thread-safe and serializes every query.
class SerializedProvider : public LogitProvider {
 public:
  explicit SerializedProvider(const LogitProvider& inner) : inner_(inner) {}

  const std::vector<std::string>& vocab() const override {
    return inner_.vocab();
  }
  ProviderCapabilities capabilities() const override;
  absl::StatusOr<std::vector<double>> NextLogits(
      std::span<const TokenId> context) const override;
  absl::StatusOr<std::vector<double>> MaskedLogits(
      std::span<const TokenId> tokens, std::size_t position) const override;
  std::optional<TokenId> stop_token() const override {
    return inner_.stop_token();
  }

 private:
  const LogitProvider& inner_;
  mutable std::mutex mu_;
};

// Maps words to provider token ids.
//
// A word matches a vocabulary entry exactly, or with the word-start marker
// of byte-level BPE ("Ġ") or SentencePiece ("▁") vocabularies
// prepended. Decoding strips those markers again.
class VocabularyIndex {
 public:
  explicit VocabularyIndex(const std::vector<std::string>& vocab);

  std::optional<TokenId> Find(absl::string_view word) const;
  // Fails with InvalidArgument naming the first word that has no entry.
  absl::StatusOr<std::vector<TokenId>> Encode(
      std::span<const std::string> words) const;
  std::vector<std::string> Decode(std::span<const TokenId> ids) const;
  std::size_t size() const { return vocab_.size(); }

 private:
  std::vector<std::string> vocab_;
  absl::flat_hash_map<std::string, TokenId> index_;
};

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_LOGIT_PROVIDER_H_
