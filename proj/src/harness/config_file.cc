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

#include "dpgeom/harness/config_file.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "dpgeom/common/status_macros.h"

namespace dpgeom {
namespace {

absl::Status LineError(const ConfigEntry& e, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("config line ", e.line, " (", e.key, "): ", what));
}

absl::StatusOr<std::size_t> ParseCount(const ConfigEntry& e) {
  std::uint64_t v = 0;
  if (!absl::SimpleAtoi(e.value, &v)) {
    return LineError(e, absl::StrCat("expected a non-negative integer, got '",
                                     e.value, "'"));
  }
  return static_cast<std::size_t>(v);
}

absl::StatusOr<double> ParseReal(const ConfigEntry& e) {
  double v = 0;
  if (!absl::SimpleAtod(e.value, &v) || !std::isfinite(v)) {
    return LineError(e,
                     absl::StrCat("expected a finite number, got '", e.value,
                                  "'"));
  }
  return v;
}

absl::StatusOr<bool> ParseBool(const ConfigEntry& e) {
  bool v = false;
  if (!absl::SimpleAtob(e.value, &v)) {
    return LineError(e, absl::StrCat("expected true or false, got '", e.value,
                                     "'"));
  }
  return v;
}

std::string ResolvePath(const std::string& value, const std::string& base) {
  if (value.empty() || base.empty()) return value;
  std::filesystem::path p(value);
  if (p.is_absolute()) return value;
  return (std::filesystem::path(base) / p).lexically_normal().string();
}

}  // namespace

absl::StatusOr<std::vector<ConfigEntry>> ParseConfig(absl::string_view text) {
  std::vector<ConfigEntry> entries;
  std::size_t line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": expected key = value"));
    }
    ConfigEntry e;
    e.line = line_no;
    e.key = std::string(absl::StripAsciiWhitespace(line.substr(0, eq)));
    absl::string_view value = absl::StripAsciiWhitespace(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    e.value = std::string(value);
    if (e.key.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": empty key"));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

absl::StatusOr<std::vector<ConfigEntry>> LoadConfigFile(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<std::vector<ConfigEntry>> entries = ParseConfig(buffer.str());
  if (!entries.ok()) return WithContext(entries.status(), path);
  return entries;
}

absl::Status ApplyConfig(std::span<const ConfigEntry> entries,
                         const std::string& base_dir,
                         ExperimentConfig* config) {
  double clip_lo = config->clip.lo();
  double clip_hi = config->clip.hi();
  const ConfigEntry* clip_entry = nullptr;
  for (const ConfigEntry& e : entries) {
    const std::string& k = e.key;
    if (k == "mechanisms") {
      config->mechanisms.clear();
      for (absl::string_view name :
           absl::StrSplit(e.value, ',', absl::SkipWhitespace())) {
        absl::StatusOr<Mechanism> m =
            ParseMechanism(absl::StripAsciiWhitespace(name));
        if (!m.ok()) return LineError(e, m.status().message());
        config->mechanisms.push_back(*m);
      }
    } else if (k == "epsilons") {
      config->epsilons.clear();
      for (absl::string_view item :
           absl::StrSplit(e.value, ',', absl::SkipWhitespace())) {
        double v = 0;
        if (!absl::SimpleAtod(absl::StripAsciiWhitespace(item), &v)) {
          return LineError(e, absl::StrCat("bad epsilon '", item, "'"));
        }
        config->epsilons.push_back(v);
      }
    } else if (k == "trials") {
      ASSIGN_OR_RETURN(config->trials, ParseCount(e));
    } else if (k == "seed") {
      std::uint64_t seed = 0;
      if (!absl::SimpleAtoi(e.value, &seed)) {
        return LineError(e, "expected an unsigned integer");
      }
      config->seed = seed;
    } else if (k == "estimator") {
      absl::StatusOr<Estimator> est = ParseEstimator(e.value);
      if (!est.ok()) return LineError(e, est.status().message());
      config->estimator.kind = *est;
    } else if (k == "discard_fraction") {
      ASSIGN_OR_RETURN(config->estimator.discard_fraction, ParseReal(e));
    } else if (k == "k") {
      ASSIGN_OR_RETURN(config->estimator.k, ParseCount(e));
    } else if (k == "min_tokens") {
      ASSIGN_OR_RETURN(config->filter.min_tokens, ParseCount(e));
    } else if (k == "max_tokens") {
      ASSIGN_OR_RETURN(config->filter.max_tokens, ParseCount(e));
    } else if (k == "drop_special") {
      ASSIGN_OR_RETURN(config->filter.drop_special, ParseBool(e));
    } else if (k == "clip_lo") {
      ASSIGN_OR_RETURN(clip_lo, ParseReal(e));
      clip_entry = &e;
    } else if (k == "clip_hi") {
      ASSIGN_OR_RETURN(clip_hi, ParseReal(e));
      clip_entry = &e;
    } else if (k == "prompt_prefix") {
      config->prompt.prefix = e.value;
    } else if (k == "prompt_suffix") {
      config->prompt.suffix = e.value;
    } else if (k == "max_len") {
      if (e.value == "auto") {
        config->max_len.reset();
      } else {
        ASSIGN_OR_RETURN(config->max_len, ParseCount(e));
      }
    } else if (k == "workers") {
      ASSIGN_OR_RETURN(config->workers, ParseCount(e));
    } else if (k == "pairs") {
      config->pairs_path = ResolvePath(e.value, base_dir);
    } else if (k == "embedding_table") {
      config->embedding_table_path = ResolvePath(e.value, base_dir);
    } else if (k == "corpus") {
      config->corpus_path = ResolvePath(e.value, base_dir);
    } else if (k == "provider_url") {
      config->provider_url = e.value;
    } else if (k == "stop_token") {
      if (e.value.empty()) {
        config->stop_token.reset();
      } else {
        config->stop_token = e.value;
      }
    } else if (k == "context_weight") {
      ASSIGN_OR_RETURN(config->context_weight, ParseReal(e));
    } else {
      return LineError(e, "unknown key");
    }
  }
  if (clip_entry != nullptr) {
    absl::StatusOr<ClipConfig> clip = ClipConfig::Create(clip_lo, clip_hi);
    if (!clip.ok()) return LineError(*clip_entry, clip.status().message());
    config->clip = *clip;
  }
  return absl::OkStatus();
}

}  // namespace dpgeom
