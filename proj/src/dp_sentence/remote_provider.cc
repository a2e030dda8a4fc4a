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

#include "dpgeom/dp_sentence/remote_provider.h"

#include "absl/strings/str_cat.h"
#include "dpgeom/common/status_macros.h"
#include "httplib.h"
#include "json.hpp"

namespace dpgeom {

using nlohmann::json;

class RemoteLogitProvider::Client {
 public:
  Client(const std::string& base_url, int timeout_seconds)
      : base_url_(base_url), http_(base_url) {
    http_.set_connection_timeout(timeout_seconds, 0);
    http_.set_read_timeout(timeout_seconds, 0);
    http_.set_write_timeout(timeout_seconds, 0);
  }

  absl::StatusOr<json> Get(const std::string& path) {
    return Handle(path, http_.Get(path));
  }

  absl::StatusOr<json> Post(const std::string& path, const json& body) {
    return Handle(path, http_.Post(path, body.dump(), "application/json"));
  }

 private:
  absl::StatusOr<json> Handle(const std::string& path,
                              const httplib::Result& result) {
    if (!result) {
      return absl::UnavailableError(
          absl::StrCat(base_url_, path, ": ", httplib::to_string(result.error())));
    }
    if (result->status != 200) {
      return absl::UnavailableError(absl::StrCat(
          base_url_, path, ": HTTP ", result->status, " ", result->body));
    }
    json parsed = json::parse(result->body, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) {
      return absl::DataLossError(
          absl::StrCat(base_url_, path, ": response is not JSON"));
    }
    return parsed;
  }

  std::string base_url_;
  httplib::Client http_;
};

namespace {

absl::StatusOr<std::vector<double>> ParseLogits(const json& reply) {
  if (!reply.is_object() || !reply.contains("logits") ||
      !reply["logits"].is_array()) {
    return absl::DataLossError("response lacks a 'logits' array");
  }
  std::vector<double> logits;
  logits.reserve(reply["logits"].size());
  for (const json& v : reply["logits"]) {
    if (!v.is_number()) return absl::DataLossError("non-numeric logit");
    logits.push_back(v.get<double>());
  }
  return logits;
}

}  // namespace

RemoteLogitProvider::RemoteLogitProvider(std::unique_ptr<Client> client)
    : client_(std::move(client)) {}

RemoteLogitProvider::~RemoteLogitProvider() = default;

absl::StatusOr<std::unique_ptr<RemoteLogitProvider>>
RemoteLogitProvider::Connect(const RemoteProviderOptions& options) {
  std::unique_ptr<RemoteLogitProvider> provider(new RemoteLogitProvider(
      std::make_unique<Client>(options.base_url, options.timeout_seconds)));
  ASSIGN_OR_RETURN(json reply, provider->client_->Get("/vocab"));
  if (!reply.is_object() || !reply.contains("tokens") ||
      !reply["tokens"].is_array()) {
    return absl::DataLossError("/vocab response lacks a 'tokens' array");
  }
  for (const json& token : reply["tokens"]) {
    if (!token.is_string()) return absl::DataLossError("non-string token");
    provider->vocab_.push_back(token.get<std::string>());
  }
  if (provider->vocab_.empty()) {
    return absl::DataLossError("/vocab returned an empty vocabulary");
  }
  if (options.stop_token.has_value()) {
    std::optional<TokenId> stop =
        VocabularyIndex(provider->vocab_).Find(*options.stop_token);
    if (!stop.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "stop token '", *options.stop_token, "' is not in the vocabulary"));
    }
    provider->stop_ = stop;
  }
  return provider;
}

absl::StatusOr<std::vector<double>> RemoteLogitProvider::NextLogits(
    std::span<const TokenId> context) const {
  json body = {{"context", std::vector<TokenId>(context.begin(), context.end())}};
  ASSIGN_OR_RETURN(json reply, client_->Post("/next_logits", body));
  ASSIGN_OR_RETURN(std::vector<double> logits, ParseLogits(reply));
  RETURN_IF_ERROR(ValidateLogits(*this, logits));
  return logits;
}

absl::StatusOr<std::vector<double>> RemoteLogitProvider::MaskedLogits(
    std::span<const TokenId> tokens, std::size_t position) const {
  json body = {{"tokens", std::vector<TokenId>(tokens.begin(), tokens.end())},
               {"position", position}};
  ASSIGN_OR_RETURN(json reply, client_->Post("/masked_logits", body));
  ASSIGN_OR_RETURN(std::vector<double> logits, ParseLogits(reply));
  RETURN_IF_ERROR(ValidateLogits(*this, logits));
  return logits;
}

}  // namespace dpgeom
