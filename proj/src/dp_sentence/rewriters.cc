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

#include "dpgeom/dp_sentence/rewriters.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dpgeom/common/status_macros.h"

namespace dpgeom {
namespace {

std::vector<TokenId> ResolveWords(absl::string_view text,
                                  const VocabularyIndex& vocab,
                                  std::vector<std::string>& unresolved) {
  std::vector<TokenId> ids;
  for (absl::string_view word :
       absl::StrSplit(text, absl::ByAnyChar(" \t\n"), absl::SkipEmpty())) {
    if (std::optional<TokenId> id = vocab.Find(word)) {
      ids.push_back(*id);
    } else {
      unresolved.emplace_back(word);
    }
  }
  return ids;
}

// Fetches, validates and clips one logit vector, then samples from it.
absl::StatusOr<TokenId> DrawToken(const LogitProvider& provider,
                                  absl::StatusOr<std::vector<double>> logits,
                                  const ClipConfig& clip, double temperature,
                                  Rng& rng) {
  if (!logits.ok()) return logits.status();
  RETURN_IF_ERROR(ValidateLogits(provider, *logits));
  ASSIGN_OR_RETURN(std::vector<double> clipped, ClipLogits(*logits, clip));
  ASSIGN_OR_RETURN(std::size_t index, SampleToken(clipped, temperature, rng));
  return static_cast<TokenId>(index);
}

}  // namespace

ResolvedPrompt ResolvePrompt(const PromptTemplate& prompt,
                             const VocabularyIndex& vocab) {
  ResolvedPrompt resolved;
  resolved.prefix = ResolveWords(prompt.prefix, vocab, resolved.unresolved);
  resolved.suffix = ResolveWords(prompt.suffix, vocab, resolved.unresolved);
  return resolved;
}

std::size_t DefaultMaxLength(std::size_t input_length) {
  return std::max<std::size_t>(2 * input_length, 16);
}

absl::StatusOr<GeneratedText> CausalRewrite(const LogitProvider& provider,
                                            std::span<const TokenId> input,
                                            PrivacyBudget budget,
                                            const ClipConfig& clip,
                                            const CausalOptions& options,
                                            Rng& rng) {
  if (!provider.capabilities().causal) {
    return absl::FailedPreconditionError(
        "provider does not support causal scoring");
  }
  if (input.empty()) {
    return absl::InvalidArgumentError("causal rewrite of an empty input");
  }
  const std::optional<TokenId> stop =
      options.stop_token.has_value() ? options.stop_token
                                     : provider.stop_token();
  const std::size_t max_len =
      options.max_len.value_or(DefaultMaxLength(input.size()));
  const double temperature = TemperatureFor(budget, clip);

  std::vector<TokenId> context;
  context.reserve(options.prompt.prefix.size() + input.size() +
                  options.prompt.suffix.size() + max_len);
  context.insert(context.end(), options.prompt.prefix.begin(),
                 options.prompt.prefix.end());
  context.insert(context.end(), input.begin(), input.end());
  context.insert(context.end(), options.prompt.suffix.begin(),
                 options.prompt.suffix.end());

  GeneratedText out;
  while (out.tokens.size() < max_len) {
    absl::StatusOr<TokenId> token =
        DrawToken(provider, provider.NextLogits(context), clip, temperature,
                  rng);
    if (!token.ok()) {
      return WithContext(token.status(),
                         absl::StrCat("causal rewrite step ",
                                      out.sampling_steps));
    }
    ++out.sampling_steps;
    if (stop.has_value() && *token == *stop) {
      out.stopped = true;
      break;
    }
    out.tokens.push_back(*token);
    context.push_back(*token);
  }
  return out;
}

absl::StatusOr<std::vector<TokenId>> MlmRewrite(const LogitProvider& provider,
                                                std::span<const TokenId> input,
                                                PrivacyBudget budget,
                                                const ClipConfig& clip,
                                                Rng& rng) {
  if (input.empty()) return std::vector<TokenId>();
  if (!provider.capabilities().masked) {
    return absl::FailedPreconditionError(
        "provider does not support masked scoring");
  }
  const double temperature = TemperatureFor(budget, clip);
  std::vector<TokenId> output(input.size());
  for (std::size_t p = 0; p < input.size(); ++p) {
    absl::StatusOr<TokenId> token = DrawToken(
        provider, provider.MaskedLogits(input, p), clip, temperature, rng);
    if (!token.ok()) {
      return WithContext(token.status(),
                         absl::StrCat("masked rewrite position ", p));
    }
    output[p] = *token;
  }
  return output;
}

double ComposedEpsilon(PrivacyBudget budget, std::size_t steps) {
  return budget.epsilon() * static_cast<double>(steps);
}

}  // namespace dpgeom
