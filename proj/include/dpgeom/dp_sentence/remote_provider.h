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

// Client for logit servers that speak the JSON-over-HTTP provider protocol:
//
//   GET  /vocab          -> {"tokens": [string]}
//   POST /next_logits    {"context": [int]}               -> {"logits": [number]}
//   POST /masked_logits  {"tokens": [int], "position": int} -> {"logits": [number]}
//
// Transport failures and non-200 replies surface as kUnavailable.

#ifndef DPGEOM_DP_SENTENCE_REMOTE_PROVIDER_H_
#define DPGEOM_DP_SENTENCE_REMOTE_PROVIDER_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/dp_sentence/logit_provider.h"

namespace dpgeom {

struct RemoteProviderOptions {
  // e.g. "http://127.0.0.1:8765"
  std::string base_url;
  // Vocabulary entry used as end-of-sequence, looked up after /vocab.
  std::optional<std::string> stop_token;
  int timeout_seconds = 60;
};

// One connection; not safe for concurrent use (capabilities().thread_safe is
// false). Wrap in SerializedProvider when sharing across threads.
class RemoteLogitProvider : public LogitProvider {
 public:
  // Fetches /vocab. Fails if the server is unreachable or the stop token is
  // not in the vocabulary.
  static absl::StatusOr<std::unique_ptr<RemoteLogitProvider>> Connect(
      const RemoteProviderOptions& options);
  ~RemoteLogitProvider() override;

  const std::vector<std::string>& vocab() const override { return vocab_; }
  ProviderCapabilities capabilities() const override {
    return {.causal = true, .masked = true, .thread_safe = false};
  }
  absl::StatusOr<std::vector<double>> NextLogits(
      std::span<const TokenId> context) const override;
  absl::StatusOr<std::vector<double>> MaskedLogits(
      std::span<const TokenId> tokens, std::size_t position) const override;
  std::optional<TokenId> stop_token() const override { return stop_; }

 private:
  class Client;

  explicit RemoteLogitProvider(std::unique_ptr<Client> client);

  std::unique_ptr<Client> client_;
  std::vector<std::string> vocab_;
  std::optional<TokenId> stop_;
};

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_REMOTE_PROVIDER_H_
