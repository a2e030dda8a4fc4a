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

// Sentence-level DP rewriting by temperature sampling over clipped logits.
//
// Epsilon is spent per sampled token. Under naive sequential composition a
// rewrite that draws n tokens costs n * epsilon; see ComposedEpsilon.

#ifndef DPGEOM_DP_SENTENCE_REWRITERS_H_
#define DPGEOM_DP_SENTENCE_REWRITERS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dpgeom/common/privacy_budget.h"
#include "dpgeom/common/random.h"
#include "dpgeom/dp_sentence/logit_provider.h"
#include "dpgeom/dp_sentence/sampling.h"

namespace dpgeom {

// Instruction wrapped around the input for causal rewriting. It is fixed and
// independent of the private text, so it is outside the privacy accounting.
struct PromptTemplate {
  std::string prefix = "Paraphrase the following sentence :";
  std::string suffix = "Paraphrase :";
};

struct ResolvedPrompt {
  std::vector<TokenId> prefix;
  std::vector<TokenId> suffix;
  // Template words with no vocabulary entry; they are left out of the
  // context.
  std::vector<std::string> unresolved;
};

// Maps the template's whitespace/punctuation-split words onto `vocab`.
ResolvedPrompt ResolvePrompt(const PromptTemplate& prompt,
                             const VocabularyIndex& vocab);

struct CausalOptions {
  ResolvedPrompt prompt;
  // Cap on generated tokens; unset means max(2 * input length, 16).
  std::optional<std::size_t> max_len;
  // Overrides the provider's stop token when set.
  std::optional<TokenId> stop_token;
};

std::size_t DefaultMaxLength(std::size_t input_length);

struct GeneratedText {
  std::vector<TokenId> tokens;  // generated tokens, stop token excluded
  std::size_t sampling_steps = 0;  // draws made, including a sampled stop
  bool stopped = false;            // ended on the stop token
};

// Causal rewriting. The context starts as prefix + input + suffix; each step
// fetches next-token logits, clips them, samples at TemperatureFor(budget,
// clip) and appends the draw. Generation ends when the stop token is drawn
// or max_len tokens have been produced. Only generated tokens are returned.
absl::StatusOr<GeneratedText> CausalRewrite(const LogitProvider& provider,
                                            std::span<const TokenId> input,
                                            PrivacyBudget budget,
                                            const ClipConfig& clip,
                                            const CausalOptions& options,
                                            Rng& rng);

// Masked rewriting. Position p is resampled from MaskedLogits(input, p):
// the query always sees the original sentence, never earlier substitutions,
// so a poor draw cannot steer later positions. Output length equals input
// length; empty input gives empty output.
absl::StatusOr<std::vector<TokenId>> MlmRewrite(const LogitProvider& provider,
                                                std::span<const TokenId> input,
                                                PrivacyBudget budget,
                                                const ClipConfig& clip,
                                                Rng& rng);

// epsilon * steps.
double ComposedEpsilon(PrivacyBudget budget, std::size_t steps);

}  // namespace dpgeom

#endif  // DPGEOM_DP_SENTENCE_REWRITERS_H_
