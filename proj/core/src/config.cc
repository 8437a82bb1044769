// Copyright 2026 The WikiTransfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wikitransfer/builder.h"

namespace wikitransfer {

namespace {

constexpr std::string_view kPresets[] = {"cnndm", "xsum", "reddit",
                                         "bigpatent"};

std::string_view Trim(std::string_view s) {
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
T ParseInteger(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("invalid integer for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

double ParseReal(std::string_view key, std::string_view value) {
  // std::from_chars for double is available in libstdc++ 11.
  double out = 0.0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() ||
      !std::isfinite(out)) {
    throw ConfigError("invalid number for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw ConfigError("invalid boolean for " + std::string(key) + ": '" +
                    std::string(value) + "'");
}

// Name for (lo, hi) without validating the bounds; Validate() does that.
ExtractiveBin BinForBounds(double lo, double hi) {
  for (const ExtractiveBin& bin : kCanonicalBins) {
    if (std::abs(bin.lo - lo) < 1e-12 && std::abs(bin.hi - hi) < 1e-12) {
      return bin;
    }
  }
  return {BinName::kCustom, lo, hi};
}

std::string FormatReal(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view SelectionName(Selection selection) {
  switch (selection) {
    case Selection::kFirstM:
      return "first_m";
    case Selection::kIndOrig:
      return "ind_orig";
    case Selection::kIndOrigP:
      return "ind_orig_p";
  }
  return "first_m";
}

std::optional<Selection> ParseSelection(std::string_view name) {
  if (name == "first_m" || name == "FirstM" || name == "first-m") {
    return Selection::kFirstM;
  }
  if (name == "ind_orig" || name == "IndOrig" || name == "ind-orig") {
    return Selection::kIndOrig;
  }
  if (name == "ind_orig_p" || name == "IndOrigP" || name == "ind-orig-p") {
    return Selection::kIndOrigP;
  }
  return std::nullopt;
}

std::size_t BuildConfig::EffectiveMinSourceSentences() const {
  return min_source_sentences.value_or(2 * summary_sentences + 1);
}

std::int64_t BuildConfig::EffectiveValidationSize() const {
  if (validation_size) return *validation_size;
  if (max_examples && *max_examples <= kDefaultValidationSize) {
    return *max_examples / 10;
  }
  return kDefaultValidationSize;
}

void BuildConfig::Validate() const {
  if (summary_sentences < 1) throw ConfigError("m must be >= 1");
  if (!(target_bin.lo >= 0.0 && target_bin.lo < target_bin.hi &&
        target_bin.hi <= 1.0)) {
    throw ConfigError("target bin must satisfy 0 <= lo < hi <= 1");
  }
  if (EffectiveMinSourceSentences() <= summary_sentences) {
    throw ConfigError("min_source_sentences must exceed m");
  }
  if (max_examples && *max_examples < 1) {
    throw ConfigError("max_examples must be >= 1");
  }
  const std::int64_t valid = EffectiveValidationSize();
  if (valid < 0) throw ConfigError("validation_size must be >= 0");
  if (max_examples && valid >= *max_examples) {
    throw ConfigError("validation_size must be smaller than max_examples");
  }
}

std::span<const std::string_view> PresetNames() { return kPresets; }

BuildConfig PresetConfig(std::string_view name) {
  BuildConfig c;
  if (name == "cnndm") {
    c.summary_sentences = 3;
    c.target_bin = CanonicalBin(BinName::kExtremelyExtractive);
    c.selection = Selection::kFirstM;
    c.lead_bias = true;
  } else if (name == "xsum") {
    c.summary_sentences = 1;
    c.target_bin = CanonicalBin(BinName::kExtremelyAbstractive);
    c.selection = Selection::kFirstM;
    c.force_bin_by_removal = true;
  } else if (name == "reddit") {
    c.summary_sentences = 1;
    c.target_bin = CanonicalBin(BinName::kMoreExtractive);
    c.selection = Selection::kIndOrig;
  } else if (name == "bigpatent") {
    c.summary_sentences = 4;
    c.target_bin = CanonicalBin(BinName::kMoreExtractive);
    c.selection = Selection::kFirstM;
  } else {
    throw ConfigError("unknown preset '" + std::string(name) +
                      "' (expected cnndm, xsum, reddit or bigpatent)");
  }
  return c;
}

void ApplyConfigValue(BuildConfig& c, std::string_view key,
                      std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "m") {
    c.summary_sentences = ParseInteger<std::size_t>(key, value);
  } else if (key == "bin") {
    const auto name = ParseBinName(value);
    if (!name || *name == BinName::kCustom) {
      throw ConfigError("unknown bin '" + std::string(value) + "'");
    }
    c.target_bin = CanonicalBin(*name);
  } else if (key == "bin_lo") {
    c.target_bin = BinForBounds(ParseReal(key, value), c.target_bin.hi);
  } else if (key == "bin_hi") {
    c.target_bin = BinForBounds(c.target_bin.lo, ParseReal(key, value));
  } else if (key == "selection") {
    const auto s = ParseSelection(value);
    if (!s) throw ConfigError("unknown selection '" + std::string(value) + "'");
    c.selection = *s;
  } else if (key == "lead_bias") {
    c.lead_bias = ParseBool(key, value);
  } else if (key == "force_bin_by_removal") {
    c.force_bin_by_removal = ParseBool(key, value);
  } else if (key == "min_source_sentences") {
    if (value == "auto") {
      c.min_source_sentences.reset();
    } else {
      c.min_source_sentences = ParseInteger<std::size_t>(key, value);
    }
  } else if (key == "max_examples") {
    if (value == "unlimited") {
      c.max_examples.reset();
    } else {
      c.max_examples = ParseInteger<std::int64_t>(key, value);
    }
  } else if (key == "validation_size") {
    if (value == "auto") {
      c.validation_size.reset();
    } else {
      c.validation_size = ParseInteger<std::int64_t>(key, value);
    }
  } else if (key == "metric") {
    const auto kind = ParseMetricKind(value);
    if (!kind) throw ConfigError("unknown metric '" + std::string(value) + "'");
    c.metric.kind = *kind;
  } else if (key == "metric_field") {
    const auto field = ParseScoreField(value);
    if (!field) {
      throw ConfigError("unknown metric_field '" + std::string(value) + "'");
    }
    c.metric.field = *field;
  } else if (key == "seed") {
    c.seed = ParseInteger<std::uint64_t>(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void ApplyConfigText(BuildConfig& config, std::string_view text) {
  int line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    ApplyConfigValue(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void ApplyConfigFile(BuildConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ApplyConfigText(config, buf.str());
}

std::vector<std::pair<std::string, std::string>> ConfigSnapshot(
    const BuildConfig& c) {
  return {
      {"m", std::to_string(c.summary_sentences)},
      {"bin_lo", FormatReal(c.target_bin.lo)},
      {"bin_hi", FormatReal(c.target_bin.hi)},
      {"selection", std::string(SelectionName(c.selection))},
      {"lead_bias", c.lead_bias ? "true" : "false"},
      {"force_bin_by_removal", c.force_bin_by_removal ? "true" : "false"},
      {"min_source_sentences", std::to_string(c.EffectiveMinSourceSentences())},
      {"max_examples",
       c.max_examples ? std::to_string(*c.max_examples) : "unlimited"},
      {"validation_size", std::to_string(c.EffectiveValidationSize())},
      {"metric", std::string(MetricKindName(c.metric.kind))},
      {"metric_field", std::string(ScoreFieldName(c.metric.field))},
      {"seed", std::to_string(c.seed)},
  };
}

}  // namespace wikitransfer
