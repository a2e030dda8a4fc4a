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

#include "dpgeom/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <thread>
#include <variant>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "dpgeom/common/format.h"
#include "dpgeom/common/status_macros.h"
#include "dpgeom/dp_word/madlib.h"
#include "dpgeom/dp_word/word_tokenizer.h"

namespace dpgeom {
namespace {

// Calls fn(i) for every i in [0, n) on up to `workers` threads.
void ParallelFor(std::size_t n, std::size_t workers,
                 const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

absl::StatusOr<std::optional<IdEstimate>> EstimateEmbedded(
    const EmbeddedText& text, const FilterConfig& filter,
    const EstimatorConfig& estimator) {
  ASSIGN_OR_RETURN(std::optional<PointCloud> cloud,
                   BuildPointCloud(text, filter));
  if (!cloud.has_value()) return std::optional<IdEstimate>();
  ASSIGN_OR_RETURN(IdEstimate estimate, EstimateId(*cloud, estimator));
  return std::optional<IdEstimate>(estimate);
}

std::string JoinNumbers(const std::vector<double>& values) {
  return absl::StrJoin(values, ",", [](std::string* out, double v) {
    out->append(FormatDouble(v));
  });
}

}  // namespace

absl::string_view MechanismName(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::kMadlib:
      return "madlib";
    case Mechanism::kCausal:
      return "causal";
    case Mechanism::kMlm:
      return "mlm";
  }
  return "unknown";
}

absl::StatusOr<Mechanism> ParseMechanism(absl::string_view name) {
  for (Mechanism m : {Mechanism::kMadlib, Mechanism::kCausal, Mechanism::kMlm}) {
    if (name == MechanismName(m)) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown mechanism '", name, "'; expected madlib, causal or mlm"));
}

absl::Status ExperimentConfig::Validate() const {
  if (mechanisms.empty()) {
    return absl::InvalidArgumentError("no mechanisms configured");
  }
  for (std::size_t i = 0; i < mechanisms.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (mechanisms[i] == mechanisms[j]) {
        return absl::InvalidArgumentError(absl::StrCat(
            "mechanism '", MechanismName(mechanisms[i]), "' listed twice"));
      }
    }
  }
  if (epsilons.empty()) {
    return absl::InvalidArgumentError("no epsilon values configured");
  }
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    RETURN_IF_ERROR(PrivacyBudget::Create(epsilons[i]).status());
    for (std::size_t j = 0; j < i; ++j) {
      if (epsilons[i] == epsilons[j]) {
        return absl::InvalidArgumentError(
            absl::StrCat("epsilon ", epsilons[i], " listed twice"));
      }
    }
  }
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (workers < 1) return absl::InvalidArgumentError("workers must be >= 1");
  if (max_len.has_value() && *max_len < 1) {
    return absl::InvalidArgumentError("max_len must be >= 1");
  }
  if (!std::isfinite(context_weight) || context_weight < 0) {
    return absl::InvalidArgumentError("context_weight must be finite and >= 0");
  }
  RETURN_IF_ERROR(estimator.Validate());
  return filter.Validate();
}

ConfigEcho ExperimentConfig::Echo() const {
  std::vector<std::string> names;
  for (Mechanism m : mechanisms) names.emplace_back(MechanismName(m));
  ConfigEcho echo = {
      {"mechanisms", absl::StrJoin(names, ",")},
      {"epsilons", JoinNumbers(epsilons)},
      {"trials", absl::StrCat(trials)},
      {"seed", absl::StrCat(seed)},
      {"estimator", std::string(EstimatorName(estimator.kind))},
      {"discard_fraction", FormatDouble(estimator.discard_fraction)},
      {"k", absl::StrCat(estimator.k)},
      {"min_tokens", absl::StrCat(filter.min_tokens)},
      {"max_tokens", absl::StrCat(filter.max_tokens)},
      {"drop_special", filter.drop_special ? "true" : "false"},
      {"clip_lo", FormatDouble(clip.lo())},
      {"clip_hi", FormatDouble(clip.hi())},
      {"prompt_prefix", prompt.prefix},
      {"prompt_suffix", prompt.suffix},
      {"max_len", max_len.has_value() ? absl::StrCat(*max_len) : "auto"},
      {"pairs", pairs_path},
      {"embedding_table", embedding_table_path},
      {"corpus", corpus_path},
      {"provider_url", provider_url},
      {"stop_token", stop_token.value_or("")},
      {"context_weight", FormatDouble(context_weight)},
  };
  return echo;
}

std::uint64_t RowSeed(std::uint64_t root, Mechanism mechanism, double epsilon,
                      std::size_t trial, absl::string_view sentence_id) {
  return StableHasher()
      .Add(root)
      .Add(MechanismName(mechanism))
      .Add(epsilon)
      .Add(static_cast<std::uint64_t>(trial))
      .Add(sentence_id)
      .Finish();
}

absl::StatusOr<std::optional<IdEstimate>> EstimateTextId(
    const TextEmbedder& embedder, absl::string_view id,
    std::span<const std::string> words, const FilterConfig& filter,
    const EstimatorConfig& estimator) {
  ASSIGN_OR_RETURN(EmbeddedText text, embedder.Embed(id, words));
  return EstimateEmbedded(text, filter, estimator);
}

absl::StatusOr<GridResult> RunGrid(const ExperimentConfig& config,
                                   std::span<const SentencePair> pairs,
                                   const ExperimentResources& resources) {
  RETURN_IF_ERROR(config.Validate());
  if (resources.embedder == nullptr) {
    return absl::FailedPreconditionError("no text embedder configured");
  }
  for (Mechanism m : config.mechanisms) {
    if (m == Mechanism::kMadlib && resources.table == nullptr) {
      return absl::FailedPreconditionError(
          "madlib needs an embedding table");
    }
    if (m == Mechanism::kCausal || m == Mechanism::kMlm) {
      if (resources.provider == nullptr) {
        return absl::FailedPreconditionError(absl::StrCat(
            MechanismName(m), " needs a logit provider"));
      }
      const ProviderCapabilities caps = resources.provider->capabilities();
      if ((m == Mechanism::kCausal && !caps.causal) ||
          (m == Mechanism::kMlm && !caps.masked)) {
        return absl::FailedPreconditionError(absl::StrCat(
            "provider does not support ", MechanismName(m), " rewriting"));
      }
    }
  }

  const LogitProvider* provider = resources.provider;
  std::unique_ptr<SerializedProvider> serialized;
  if (provider != nullptr && !provider->capabilities().thread_safe &&
      config.workers > 1) {
    serialized = std::make_unique<SerializedProvider>(*provider);
    provider = serialized.get();
  }
  std::optional<VocabularyIndex> vocab;
  ResolvedPrompt prompt;
  if (provider != nullptr) {
    vocab.emplace(provider->vocab());
    prompt = ResolvePrompt(config.prompt, *vocab);
  }

  // Pairs in sentence-id order; reference estimates are shared by all rows.
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return pairs[a].id < pairs[b].id;
  });
  struct Reference {
    std::vector<std::string> words;
    absl::StatusOr<std::optional<IdEstimate>> estimate;
  };
  std::vector<Reference> refs(pairs.size());
  ParallelFor(pairs.size(), config.workers, [&](std::size_t i) {
    refs[i].words = SplitWords(pairs[i].reference);
    refs[i].estimate =
        EstimateTextId(*resources.embedder, pairs[i].id, refs[i].words,
                       config.filter, config.estimator);
  });

  std::vector<Mechanism> mechanisms = config.mechanisms;
  std::sort(mechanisms.begin(), mechanisms.end(),
            [](Mechanism a, Mechanism b) {
              return MechanismName(a) < MechanismName(b);
            });
  std::vector<double> epsilons = config.epsilons;
  std::sort(epsilons.begin(), epsilons.end());

  struct Unit {
    Mechanism mechanism;
    double epsilon;
    std::size_t trial;
    std::size_t pair;
  };
  std::vector<Unit> units;
  units.reserve(mechanisms.size() * epsilons.size() * config.trials *
                pairs.size());
  for (Mechanism m : mechanisms) {
    for (double eps : epsilons) {
      for (std::size_t t = 0; t < config.trials; ++t) {
        for (std::size_t p : order) units.push_back({m, eps, t, p});
      }
    }
  }

  using Outcome = std::variant<ShiftRow, SkipRecord>;
  std::vector<Outcome> outcomes(units.size());
  auto run_unit = [&](const Unit& u) -> Outcome {
    const SentencePair& pair = pairs[u.pair];
    const Reference& ref = refs[u.pair];
    auto skip = [&](absl::Status reason) -> Outcome {
      return SkipRecord{u.mechanism, u.epsilon, u.trial, pair.id,
                        std::move(reason)};
    };
    if (!ref.estimate.ok()) {
      return skip(WithContext(ref.estimate.status(), "reference"));
    }
    if (!ref.estimate->has_value()) {
      return skip(absl::FailedPreconditionError(
          "reference text fails the token filter"));
    }
    const PrivacyBudget budget = PrivacyBudget::Create(u.epsilon).value();
    Rng rng(RowSeed(config.seed, u.mechanism, u.epsilon, u.trial, pair.id));

    std::vector<std::string> transformed;
    std::size_t steps = 0;
    if (u.mechanism == Mechanism::kMadlib) {
      WordRewrite rewrite =
          MadlibRewrite(ref.words, *resources.table, budget, rng);
      transformed = std::move(rewrite.words);
      for (const WordRewriteRecord& r : rewrite.records) {
        steps += r.in_vocabulary ? 1 : 0;
      }
    } else {
      absl::StatusOr<std::vector<TokenId>> ids = vocab->Encode(ref.words);
      if (!ids.ok()) return skip(ids.status());
      if (u.mechanism == Mechanism::kCausal) {
        CausalOptions options;
        options.prompt = prompt;
        options.max_len = config.max_len;
        absl::StatusOr<GeneratedText> generated = CausalRewrite(
            *provider, *ids, budget, config.clip, options, rng);
        if (!generated.ok()) return skip(generated.status());
        transformed = vocab->Decode(generated->tokens);
        steps = generated->sampling_steps;
      } else {
        absl::StatusOr<std::vector<TokenId>> out =
            MlmRewrite(*provider, *ids, budget, config.clip, rng);
        if (!out.ok()) return skip(out.status());
        transformed = vocab->Decode(*out);
        steps = out->size();
      }
    }

    const std::string transformed_id =
        absl::StrCat(pair.id, "/", MechanismName(u.mechanism), "/",
                     FormatDouble(u.epsilon), "/", u.trial);
    absl::StatusOr<std::optional<IdEstimate>> estimate =
        EstimateTextId(*resources.embedder, transformed_id, transformed,
                       config.filter, config.estimator);
    if (!estimate.ok()) {
      return skip(WithContext(estimate.status(), "transformed"));
    }
    if (!estimate->has_value()) {
      return skip(absl::FailedPreconditionError(
          "transformed text fails the token filter"));
    }
    ShiftRow row;
    row.mechanism = u.mechanism;
    row.epsilon = u.epsilon;
    row.trial = u.trial;
    row.sentence_id = pair.id;
    row.id_reference = (*ref.estimate)->value;
    row.id_transformed = (*estimate)->value;
    row.shift = row.id_transformed - row.id_reference;
    row.privacy_steps = steps;
    return row;
  };
  ParallelFor(units.size(), config.workers,
              [&](std::size_t i) { outcomes[i] = run_unit(units[i]); });

  GridResult result;
  for (Outcome& o : outcomes) {
    if (ShiftRow* row = std::get_if<ShiftRow>(&o)) {
      result.rows.push_back(std::move(*row));
    } else {
      result.skips.push_back(std::move(std::get<SkipRecord>(o)));
    }
  }
  return result;
}

absl::StatusOr<BaselineResult> BaselineShift(
    std::span<const SentencePair> pairs, const TextEmbedder& embedder,
    const EstimatorConfig& estimator, const FilterConfig& filter) {
  RETURN_IF_ERROR(estimator.Validate());
  RETURN_IF_ERROR(filter.Validate());
  BaselineResult result;
  for (const SentencePair& pair : pairs) {
    const std::vector<std::string> ref_words = SplitWords(pair.reference);
    const std::vector<std::string> para_words = SplitWords(pair.paraphrase);
    ASSIGN_OR_RETURN(EmbeddedText ref_text, embedder.Embed(pair.id, ref_words));
    ASSIGN_OR_RETURN(EmbeddedText para_text,
                     embedder.Embed(pair.paraphrase_id, para_words));
    absl::StatusOr<std::optional<IdEstimate>> ref =
        EstimateEmbedded(ref_text, filter, estimator);
    absl::StatusOr<std::optional<IdEstimate>> para =
        EstimateEmbedded(para_text, filter, estimator);
    if (!ref.ok() || !para.ok() || !ref->has_value() || !para->has_value()) {
      ++result.stats.skipped;
      continue;
    }
    BaselineRow row;
    row.sentence_id = pair.id;
    row.id_reference = (*ref)->value;
    row.id_paraphrase = (*para)->value;
    row.shift = row.id_paraphrase - row.id_reference;
    result.rows.push_back(std::move(row));
  }
  if (result.rows.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "no pair survived filtering and estimation (", result.stats.skipped,
        " skipped)"));
  }
  BaselineStats& s = result.stats;
  s.count = result.rows.size();
  double sum = 0, sum_abs = 0;
  for (const BaselineRow& r : result.rows) {
    sum += r.shift;
    sum_abs += std::abs(r.shift);
  }
  s.mean = sum / s.count;
  s.mean_abs = sum_abs / s.count;
  double ss = 0;
  for (const BaselineRow& r : result.rows) {
    ss += (r.shift - s.mean) * (r.shift - s.mean);
  }
  s.std = std::sqrt(ss / s.count);
  return result;
}

}  // namespace dpgeom
