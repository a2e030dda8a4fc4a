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

#include "cli.h"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "dpgeom/common/format.h"
#include "dpgeom/common/status_macros.h"
#include "dpgeom/dp_sentence/dp_check.h"
#include "dpgeom/dp_sentence/remote_provider.h"
#include "dpgeom/dp_sentence/rewriters.h"
#include "dpgeom/dp_sentence/toy_bigram_provider.h"
#include "dpgeom/dp_word/madlib.h"
#include "dpgeom/dp_word/word_tokenizer.h"
#include "dpgeom/geometry/token_embeddings.h"
#include "dpgeom/harness/config_file.h"
#include "dpgeom/harness/embedder.h"
#include "dpgeom/harness/experiment.h"
#include "dpgeom/harness/report.h"
#include "dpgeom/harness/sentence_pairs.h"
#include "dpgeom/harness/toy_world.h"

namespace dpgeom {
namespace {

// A failure with the exit code it maps to.
struct Failure {
  int code;
  absl::Status status;
};

using Outcome = std::optional<Failure>;

Outcome Usage(absl::Status status) {
  return Failure{kExitUsage, std::move(status)};
}
Outcome Fail(absl::Status status) {
  return Failure{ExitCodeFor(status), std::move(status)};
}

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::optional<std::string> estimator;
  std::optional<double> discard_fraction;
  std::optional<std::size_t> neighbors;
  std::optional<std::size_t> min_tokens;
  std::optional<std::size_t> max_tokens;
  std::vector<double> epsilons;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> workers;
  std::string out;
};

// Inputs shared by several subcommands.
struct InputFlags {
  std::string pairs;
  std::string table;
  std::string corpus;
  std::string provider_url;
  std::string embeddings;
  std::vector<std::string> mechanisms;
};

// Defaults, then the config file, then flags.
Outcome BuildConfig(const GlobalFlags& g, const InputFlags& in,
                    ExperimentConfig* cfg) {
  if (!g.config.empty()) {
    absl::StatusOr<std::vector<ConfigEntry>> entries =
        LoadConfigFile(g.config);
    if (!entries.ok()) {
      return entries.status().code() == absl::StatusCode::kNotFound
                 ? Fail(entries.status())
                 : Usage(entries.status());
    }
    const std::string base =
        std::filesystem::path(g.config).parent_path().string();
    absl::Status applied = ApplyConfig(*entries, base, cfg);
    if (!applied.ok()) return Usage(WithContext(applied, g.config));
  }
  if (g.seed) cfg->seed = *g.seed;
  if (g.estimator) {
    absl::StatusOr<Estimator> e = ParseEstimator(*g.estimator);
    if (!e.ok()) return Usage(e.status());
    cfg->estimator.kind = *e;
  }
  if (g.discard_fraction) cfg->estimator.discard_fraction = *g.discard_fraction;
  if (g.neighbors) cfg->estimator.k = *g.neighbors;
  if (g.min_tokens) cfg->filter.min_tokens = *g.min_tokens;
  if (g.max_tokens) cfg->filter.max_tokens = *g.max_tokens;
  if (!g.epsilons.empty()) cfg->epsilons = g.epsilons;
  if (g.trials) cfg->trials = *g.trials;
  if (g.workers) cfg->workers = *g.workers;
  if (!in.pairs.empty()) cfg->pairs_path = in.pairs;
  if (!in.table.empty()) cfg->embedding_table_path = in.table;
  if (!in.corpus.empty()) cfg->corpus_path = in.corpus;
  if (!in.provider_url.empty()) cfg->provider_url = in.provider_url;
  if (!in.mechanisms.empty()) {
    cfg->mechanisms.clear();
    for (const std::string& name : in.mechanisms) {
      absl::StatusOr<Mechanism> m = ParseMechanism(name);
      if (!m.ok()) return Usage(m.status());
      cfg->mechanisms.push_back(*m);
    }
  }
  absl::Status valid = cfg->Validate();
  if (!valid.ok()) return Usage(valid);
  return std::nullopt;
}

bool Needs(const ExperimentConfig& cfg, Mechanism m) {
  for (Mechanism x : cfg.mechanisms) {
    if (x == m) return true;
  }
  return false;
}

struct Loaded {
  std::shared_ptr<const EmbeddingTable> table;
  std::unique_ptr<LogitProvider> provider;
  std::string provider_description;
};

Outcome LoadTable(const ExperimentConfig& cfg, Loaded* loaded) {
  if (cfg.embedding_table_path.empty()) {
    return Usage(absl::InvalidArgumentError(
        "an embedding table is required (--table or embedding_table=)"));
  }
  absl::StatusOr<EmbeddingTable> table =
      LoadEmbeddingTable(cfg.embedding_table_path);
  if (!table.ok()) return Fail(table.status());
  loaded->table = std::make_shared<const EmbeddingTable>(*std::move(table));
  return std::nullopt;
}

Outcome LoadProvider(const ExperimentConfig& cfg, Loaded* loaded) {
  if (!cfg.provider_url.empty()) {
    RemoteProviderOptions options;
    options.base_url = cfg.provider_url;
    options.stop_token = cfg.stop_token;
    absl::StatusOr<std::unique_ptr<RemoteLogitProvider>> remote =
        RemoteLogitProvider::Connect(options);
    if (!remote.ok()) {
      absl::Status s = remote.status();
      // A provider that answers but rejects the stop token is a usage error.
      return s.code() == absl::StatusCode::kInvalidArgument
                 ? Usage(s)
                 : Failure{kExitProvider, s};
    }
    loaded->provider = *std::move(remote);
    loaded->provider_description = absl::StrCat("remote ", cfg.provider_url);
    return std::nullopt;
  }
  if (cfg.corpus_path.empty()) {
    return Usage(absl::InvalidArgumentError(
        "causal and mlm need --provider-url or --corpus"));
  }
  absl::StatusOr<std::vector<std::vector<std::string>>> corpus =
      LoadCorpus(cfg.corpus_path);
  if (!corpus.ok()) return Fail(corpus.status());
  absl::StatusOr<std::unique_ptr<ToyBigramProvider>> toy =
      cfg.stop_token ? ToyBigramProvider::Create(*corpus, *cfg.stop_token)
                     : ToyBigramProvider::Create(*corpus);
  if (!toy.ok()) return Fail(WithContext(toy.status(), cfg.corpus_path));
  loaded->provider = *std::move(toy);
  loaded->provider_description = absl::StrCat("bigram ", cfg.corpus_path);
  return std::nullopt;
}

// Opens `<out_dir>/<name>`, or returns nullptr to mean `fallback`.
absl::StatusOr<std::unique_ptr<std::ofstream>> OpenOutput(
    const std::string& out_dir, const std::string& name) {
  if (out_dir.empty()) return std::unique_ptr<std::ofstream>();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", out_dir, ": ", ec.message()));
  }
  const std::string path = (std::filesystem::path(out_dir) / name).string();
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path, " for writing"));
  }
  return file;
}

Outcome EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return Fail(absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir, ": ", ec.message())));
  }
  return std::nullopt;
}

Outcome RunEstimateId(const GlobalFlags& g, const InputFlags& in,
                      std::ostream& out) {
  ExperimentConfig cfg;
  if (Outcome o = BuildConfig(g, in, &cfg)) return o;
  if (in.embeddings.empty()) {
    return Usage(absl::InvalidArgumentError("--embeddings is required"));
  }
  absl::StatusOr<std::vector<EmbeddedText>> texts =
      LoadTokenEmbeddings(in.embeddings);
  if (!texts.ok()) return Fail(texts.status());
  absl::StatusOr<std::unique_ptr<std::ofstream>> file =
      OpenOutput(g.out, "id_estimates.csv");
  if (!file.ok()) return Fail(file.status());
  std::ostream& sink = *file ? **file : out;
  sink << "id,status,estimator,value,n_points,duplicates_removed,n_used\n";
  for (const EmbeddedText& text : *texts) {
    absl::StatusOr<std::optional<PointCloud>> cloud =
        BuildPointCloud(text, cfg.filter);
    if (!cloud.ok()) return Fail(WithContext(cloud.status(), text.id));
    if (!cloud->has_value()) {
      sink << text.id << ",filtered," << EstimatorName(cfg.estimator.kind)
           << ",,,,\n";
      continue;
    }
    absl::StatusOr<IdEstimate> estimate = EstimateId(**cloud, cfg.estimator);
    if (!estimate.ok()) {
      sink << text.id << ",degenerate," << EstimatorName(cfg.estimator.kind)
           << ",," << (*cloud)->size() << ",,\n";
      continue;
    }
    sink << text.id << ",ok," << EstimatorName(estimate->estimator) << ","
         << FormatDouble(estimate->value) << "," << estimate->n_points << ","
         << estimate->duplicates_removed << "," << estimate->n_used << "\n";
  }
  return std::nullopt;
}

Outcome RunPrivatize(const GlobalFlags& g, const InputFlags& in,
                     const std::string& input_path, std::ostream& out,
                     std::ostream& err) {
  ExperimentConfig cfg;
  if (Outcome o = BuildConfig(g, in, &cfg)) return o;
  if (cfg.mechanisms.size() != 1) {
    return Usage(absl::InvalidArgumentError(
        "privatize takes exactly one --mechanism"));
  }
  if (cfg.epsilons.size() != 1) {
    return Usage(
        absl::InvalidArgumentError("privatize takes exactly one --epsilon"));
  }
  const Mechanism mechanism = cfg.mechanisms[0];
  const PrivacyBudget budget = PrivacyBudget::Create(cfg.epsilons[0]).value();
  Loaded loaded;
  if (mechanism == Mechanism::kMadlib) {
    if (Outcome o = LoadTable(cfg, &loaded)) return o;
  } else {
    if (Outcome o = LoadProvider(cfg, &loaded)) return o;
    const ProviderCapabilities caps = loaded.provider->capabilities();
    if ((mechanism == Mechanism::kCausal && !caps.causal) ||
        (mechanism == Mechanism::kMlm && !caps.masked)) {
      return Usage(absl::InvalidArgumentError(absl::StrCat(
          "provider does not support ", MechanismName(mechanism))));
    }
  }

  std::ifstream file_in;
  std::istream* text_in = &std::cin;
  if (input_path != "-") {
    file_in.open(input_path);
    if (!file_in) {
      return Fail(absl::NotFoundError(absl::StrCat("cannot open ", input_path)));
    }
    text_in = &file_in;
  }
  absl::StatusOr<std::unique_ptr<std::ofstream>> file =
      OpenOutput(g.out, "privatized.txt");
  if (!file.ok()) return Fail(file.status());
  std::ostream& sink = *file ? **file : out;

  std::optional<VocabularyIndex> vocab;
  CausalOptions causal;
  if (loaded.provider) {
    vocab.emplace(loaded.provider->vocab());
    causal.prompt = ResolvePrompt(cfg.prompt, *vocab);
    causal.max_len = cfg.max_len;
  }
  std::string line;
  std::size_t line_no = 0;
  std::size_t total_steps = 0;
  while (std::getline(*text_in, line)) {
    ++line_no;
    const std::vector<std::string> words = SplitWords(line);
    Rng rng(RowSeed(cfg.seed, mechanism, budget.epsilon(), 0,
                    absl::StrCat(line_no)));
    std::vector<std::string> rewritten;
    std::size_t steps = 0;
    if (mechanism == Mechanism::kMadlib) {
      WordRewrite r = MadlibRewrite(words, *loaded.table, budget, rng);
      for (const WordRewriteRecord& rec : r.records) steps += rec.in_vocabulary;
      rewritten = std::move(r.words);
    } else if (!words.empty()) {
      absl::StatusOr<std::vector<TokenId>> ids = vocab->Encode(words);
      if (!ids.ok()) {
        return Fail(WithContext(ids.status(), absl::StrCat("line ", line_no)));
      }
      if (mechanism == Mechanism::kCausal) {
        absl::StatusOr<GeneratedText> g2 = CausalRewrite(
            *loaded.provider, *ids, budget, cfg.clip, causal, rng);
        if (!g2.ok()) {
          return Fail(WithContext(g2.status(), absl::StrCat("line ", line_no)));
        }
        rewritten = vocab->Decode(g2->tokens);
        steps = g2->sampling_steps;
      } else {
        absl::StatusOr<std::vector<TokenId>> o2 =
            MlmRewrite(*loaded.provider, *ids, budget, cfg.clip, rng);
        if (!o2.ok()) {
          return Fail(WithContext(o2.status(), absl::StrCat("line ", line_no)));
        }
        rewritten = vocab->Decode(*o2);
        steps = o2->size();
      }
    }
    total_steps += steps;
    sink << JoinWords(rewritten) << '\n';
  }
  err << absl::StrFormat(
      "privatize: mechanism=%s epsilon_per_token=%s texts=%d "
      "budget_spends=%d composed_epsilon=%s\n",
      MechanismName(mechanism), FormatDouble(budget.epsilon()), line_no,
      total_steps, FormatDouble(ComposedEpsilon(budget, total_steps)));
  return std::nullopt;
}

Outcome RunBaseline(const GlobalFlags& g, const InputFlags& in,
                    std::ostream& out) {
  ExperimentConfig cfg;
  if (Outcome o = BuildConfig(g, in, &cfg)) return o;
  if (cfg.pairs_path.empty()) {
    return Usage(absl::InvalidArgumentError("--pairs is required"));
  }
  absl::StatusOr<std::vector<SentencePair>> pairs = LoadPairs(cfg.pairs_path);
  if (!pairs.ok()) return Fail(pairs.status());
  std::unique_ptr<TextEmbedder> embedder;
  Loaded loaded;
  if (!in.embeddings.empty()) {
    absl::StatusOr<std::vector<EmbeddedText>> texts =
        LoadTokenEmbeddings(in.embeddings);
    if (!texts.ok()) return Fail(texts.status());
    absl::StatusOr<std::unique_ptr<PrecomputedEmbedder>> pre =
        PrecomputedEmbedder::Create(*std::move(texts), in.embeddings);
    if (!pre.ok()) return Fail(pre.status());
    embedder = *std::move(pre);
  } else {
    if (Outcome o = LoadTable(cfg, &loaded)) return o;
    embedder = std::make_unique<ContextualTableEmbedder>(loaded.table,
                                                         cfg.context_weight);
  }
  absl::StatusOr<BaselineResult> result =
      BaselineShift(*pairs, *embedder, cfg.estimator, cfg.filter);
  if (!result.ok()) return Fail(result.status());
  absl::StatusOr<std::unique_ptr<std::ofstream>> file =
      OpenOutput(g.out, "baseline.csv");
  if (!file.ok()) return Fail(file.status());
  if (*file) {
    std::ostream& sink = **file;
    sink << "sentence_id,id_reference,id_paraphrase,shift\n";
    for (const BaselineRow& r : result->rows) {
      sink << r.sentence_id << "," << FormatDouble(r.id_reference) << ","
           << FormatDouble(r.id_paraphrase) << "," << FormatDouble(r.shift)
           << "\n";
    }
  }
  const BaselineStats& s = result->stats;
  out << absl::StrFormat(
      "baseline: mean_shift=%.6f std_shift=%.6f mean_abs_shift=%.6f "
      "pairs=%d skipped=%d estimator=%s embedder=%s\n",
      s.mean, s.std, s.mean_abs, s.count, s.skipped,
      EstimatorName(cfg.estimator.kind), embedder->Describe());
  return std::nullopt;
}

Outcome RunExperiment(const GlobalFlags& g, const InputFlags& in,
                      std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  if (Outcome o = BuildConfig(g, in, &cfg)) return o;
  if (cfg.pairs_path.empty()) {
    return Usage(absl::InvalidArgumentError(
        "a pairs file is required (--pairs or pairs=)"));
  }
  const std::string out_dir = g.out.empty() ? std::string(".") : g.out;
  absl::StatusOr<std::vector<SentencePair>> pairs = LoadPairs(cfg.pairs_path);
  if (!pairs.ok()) return Fail(pairs.status());
  Loaded loaded;
  if (Outcome o = LoadTable(cfg, &loaded)) return o;
  if (Needs(cfg, Mechanism::kCausal) || Needs(cfg, Mechanism::kMlm)) {
    if (Outcome o = LoadProvider(cfg, &loaded)) return o;
  }
  const ContextualTableEmbedder embedder(loaded.table, cfg.context_weight);
  ExperimentResources resources;
  resources.table = loaded.table.get();
  resources.provider = loaded.provider.get();
  resources.embedder = &embedder;

  absl::StatusOr<GridResult> grid = RunGrid(cfg, *pairs, resources);
  if (!grid.ok()) return Fail(grid.status());
  std::size_t provider_failures = 0;
  for (const SkipRecord& s : grid->skips) {
    const absl::StatusCode c = s.reason.code();
    if (c == absl::StatusCode::kUnavailable ||
        c == absl::StatusCode::kDataLoss ||
        c == absl::StatusCode::kDeadlineExceeded) {
      ++provider_failures;
    }
  }
  std::optional<BaselineStats> baseline;
  absl::StatusOr<BaselineResult> base =
      BaselineShift(*pairs, embedder, cfg.estimator, cfg.filter);
  if (base.ok()) {
    baseline = base->stats;
  } else {
    err << "warning: no baseline: " << base.status().message() << "\n";
  }
  absl::StatusOr<Report> report = Aggregate(grid->rows, baseline);
  if (!report.ok()) {
    if (provider_failures == grid->skips.size() && provider_failures > 0) {
      return Failure{kExitProvider,
                     absl::UnavailableError(absl::StrCat(
                         "every row failed at the provider; first: ",
                         grid->skips.front().reason.message()))};
    }
    return Fail(WithContext(report.status(), "no rows survived"));
  }
  report->metadata = cfg.Echo();
  report->metadata.emplace_back("embedder", embedder.Describe());
  report->metadata.emplace_back(
      "provider", loaded.provider_description.empty()
                      ? std::string("none")
                      : loaded.provider_description);
  report->metadata.emplace_back("provider_failures",
                                absl::StrCat(provider_failures));
  report->skipped = grid->skips.size();

  if (Outcome o = EnsureDir(out_dir)) return o;
  const std::filesystem::path dir(out_dir);
  absl::Status csv =
      Emit(*report, ReportFormat::kCsv, (dir / "shifts.csv").string());
  if (!csv.ok()) return Fail(csv);
  absl::Status svg =
      Emit(*report, ReportFormat::kSvg, (dir / "shifts.svg").string());
  if (!svg.ok()) return Fail(svg);
  {
    std::ofstream skips((dir / "skips.csv").string(), std::ios::binary);
    skips << "mechanism,epsilon,trial,sentence_id,reason\n";
    for (const SkipRecord& s : grid->skips) {
      std::string reason(s.reason.message());
      for (char& c : reason) {
        if (c == ',' || c == '\n') c = ';';
      }
      skips << MechanismName(s.mechanism) << "," << FormatDouble(s.epsilon)
            << "," << s.trial << "," << s.sentence_id << "," << reason << "\n";
    }
  }
  if (!grid->skips.empty()) {
    err << "skipped " << grid->skips.size() << " of "
        << grid->skips.size() + grid->rows.size()
        << " rows (details in skips.csv); provider failures: "
        << provider_failures << "\n";
  }
  out << "mechanism,epsilon,count,mean_shift,std_shift,mean_abs_shift\n";
  for (const CellSummary& c : report->cells) {
    out << absl::StrFormat("%s,%s,%d,%.6f,%.6f,%.6f\n",
                           MechanismName(c.mechanism), FormatDouble(c.epsilon),
                           c.count, c.mean_shift, c.std_shift,
                           c.mean_abs_shift);
  }
  if (baseline) {
    out << absl::StrFormat("baseline,%d pairs,mean_shift=%.6f\n",
                           baseline->count, baseline->mean);
  }
  return std::nullopt;
}

struct CheckDpFlags {
  std::size_t vocab_size = 3;
  double clip_lo = -1;
  double clip_hi = 1;
  double step = 0.25;
};

Outcome RunCheckDp(const GlobalFlags& g, const CheckDpFlags& f,
                   std::ostream& out) {
  absl::StatusOr<ClipConfig> clip = ClipConfig::Create(f.clip_lo, f.clip_hi);
  if (!clip.ok()) return Usage(clip.status());
  std::vector<double> epsilons = g.epsilons;
  if (epsilons.empty()) epsilons = {0.5, 1, 2};
  bool all_pass = true;
  out << "epsilon,temperature,grid_points_per_axis,vectors,max_ratio,bound,"
         "pass\n";
  for (double eps : epsilons) {
    absl::StatusOr<PrivacyBudget> budget = PrivacyBudget::Create(eps);
    if (!budget.ok()) return Usage(budget.status());
    absl::StatusOr<DpRatioResult> r =
        DpRatioCheck(*clip, *budget, f.vocab_size, f.step);
    if (!r.ok()) {
      return r.status().code() == absl::StatusCode::kOutOfRange
                 ? Fail(r.status())
                 : Usage(r.status());
    }
    const double bound = std::exp(eps);
    const bool pass = r->max_ratio <= bound + 1e-9;
    all_pass = all_pass && pass;
    out << absl::StrFormat("%s,%s,%d,%d,%.17g,%.17g,%s\n", FormatDouble(eps),
                           FormatDouble(r->temperature),
                           r->grid_points_per_axis, r->vectors, r->max_ratio,
                           bound, pass ? "yes" : "no");
  }
  if (!all_pass) {
    return Fail(absl::InternalError("probability ratio exceeds exp(epsilon)"));
  }
  return std::nullopt;
}

Outcome RunToyData(const GlobalFlags& g, std::ostream& out) {
  if (g.out.empty()) {
    return Usage(absl::InvalidArgumentError("toy-data needs --out"));
  }
  ToyWorldOptions options;
  if (g.seed) options.seed = *g.seed;
  absl::StatusOr<ToyWorld> world = MakeToyWorld(options);
  if (!world.ok()) return Fail(world.status());
  absl::Status written = WriteToyWorld(*world, g.out, options.seed);
  if (!written.ok()) return Fail(written);
  out << "wrote toy data to " << g.out << "\n";
  return std::nullopt;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kDeadlineExceeded:
    case absl::StatusCode::kDataLoss:
      return kExitProvider;
    default:
      return kExitData;
  }
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Differentially private text rewriting and intrinsic-dimension "
               "analysis",
               "dpgeom"};
  app.require_subcommand(1, 1);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Root seed");
  app.add_option("--config", g.config, "key=value experiment config file");
  app.add_option("--estimator", g.estimator, "twonn or lbmle");
  app.add_option("--discard-fraction", g.discard_fraction,
                 "TwoNN censored fraction of the largest ratios");
  app.add_option("--neighbors", g.neighbors, "Levina-Bickel neighborhood k");
  app.add_option("--min-tokens", g.min_tokens, "Minimum tokens per text");
  app.add_option("--max-tokens", g.max_tokens, "Truncation length");
  app.add_option("--epsilon", g.epsilons, "Privacy budget (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--trials", g.trials, "Trials per sentence and epsilon");
  app.add_option("--workers", g.workers, "Concurrent rows");
  app.add_option("--out", g.out, "Output directory");

  InputFlags in;
  auto add_inputs = [&](CLI::App* sub, bool mechanisms) {
    sub->add_option("--pairs", in.pairs, "MRPC-format pairs file");
    sub->add_option("--table", in.table, "Static embedding table");
    sub->add_option("--corpus", in.corpus,
                    "Corpus for the bigram logit provider");
    sub->add_option("--provider-url", in.provider_url,
                    "Remote logit provider base URL");
    if (mechanisms) {
      sub->add_option("--mechanism", in.mechanisms,
                      "madlib, causal or mlm (repeatable)")
          ->allow_extra_args(false);
    }
  };

  CLI::App* estimate = app.add_subcommand(
      "estimate-id", "Estimate the intrinsic dimension of embedded texts");
  estimate->add_option("--embeddings", in.embeddings, "Token embeddings JSONL")
      ->required();

  std::string input_path = "-";
  CLI::App* privatize =
      app.add_subcommand("privatize", "Rewrite text, one line per text");
  add_inputs(privatize, true);
  privatize->add_option("--in", input_path, "Input text file, - for stdin");

  CLI::App* baseline = app.add_subcommand(
      "baseline", "ID shift between references and human paraphrases");
  add_inputs(baseline, false);
  baseline->add_option("--embeddings", in.embeddings,
                       "Precomputed token embeddings JSONL");

  CLI::App* experiment =
      app.add_subcommand("experiment", "Run the mechanism x epsilon grid");
  add_inputs(experiment, true);

  CheckDpFlags dp;
  CLI::App* check_dp = app.add_subcommand(
      "check-dp", "Enumerate clipped logits and bound probability ratios");
  check_dp->add_option("--vocab-size", dp.vocab_size, "Vocabulary size");
  check_dp->add_option("--clip-lo", dp.clip_lo, "Lower clip bound");
  check_dp->add_option("--clip-hi", dp.clip_hi, "Upper clip bound");
  check_dp->add_option("--step", dp.step, "Grid step");

  CLI::App* toy =
      app.add_subcommand("toy-data", "Write a seeded synthetic data set");

  for (CLI::App* sub : {estimate, privatize, baseline, experiment, check_dp,
                        toy}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Outcome outcome;
  if (*estimate) {
    outcome = RunEstimateId(g, in, out);
  } else if (*privatize) {
    outcome = RunPrivatize(g, in, input_path, out, err);
  } else if (*baseline) {
    outcome = RunBaseline(g, in, out);
  } else if (*experiment) {
    outcome = RunExperiment(g, in, out, err);
  } else if (*check_dp) {
    outcome = RunCheckDp(g, dp, out);
  } else if (*toy) {
    outcome = RunToyData(g, out);
  }
  if (outcome.has_value()) {
    err << "dpgeom: " << outcome->status.ToString() << "\n";
    return outcome->code;
  }
  return kExitOk;
}

}  // namespace dpgeom
