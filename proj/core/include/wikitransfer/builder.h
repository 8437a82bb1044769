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

// Construction of pseudo summarization pairs from generic articles.
//
// For each article: take M summary sentences (the lead, or the sentences with
// the highest self-ROUGE), compute the top-M extractive oracle of the rest of
// the article against them, and keep the pair only if the oracle lands in
// the target extractiveness bin. Pairs above the bin may be pushed down into
// it by deleting the best-matching source sentences one at a time.

#ifndef WIKITRANSFER_BUILDER_H_
#define WIKITRANSFER_BUILDER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wikitransfer/corpus.h"
#include "wikitransfer/oracle.h"
#include "wikitransfer/rouge.h"

namespace wikitransfer {

enum class Selection {
  kFirstM,    // the first M sentences
  kIndOrig,   // greedy highest self-ROUGE-1 F1 against the rest
  kIndOrigP,  // greedy highest self-ROUGE-1 precision against the rest
};

std::string_view SelectionName(Selection selection);  // "first_m"...
std::optional<Selection> ParseSelection(std::string_view name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kDefaultValidationSize = 10000;

struct BuildConfig {
  std::size_t summary_sentences = 3;  // M
  ExtractiveBin target_bin = CanonicalBin(BinName::kExtremelyExtractive);
  Selection selection = Selection::kFirstM;
  bool lead_bias = false;
  bool force_bin_by_removal = false;
  // Unset means 2M+1.
  std::optional<std::size_t> min_source_sentences;
  // Unset means unlimited.
  std::optional<std::int64_t> max_examples;
  // Unset means 10000, reduced to max_examples / 10 when a smaller cap is
  // set.
  std::optional<std::int64_t> validation_size;
  MetricConfig metric;
  std::uint64_t seed = 0;

  std::size_t EffectiveMinSourceSentences() const;
  std::int64_t EffectiveValidationSize() const;

  // Throws ConfigError when an invariant does not hold.
  void Validate() const;
};

// Named presets: cnndm, xsum, reddit, bigpatent. Throws ConfigError.
BuildConfig PresetConfig(std::string_view name);
std::span<const std::string_view> PresetNames();

// Flat key=value configuration. Keys: m, bin, bin_lo, bin_hi, selection,
// lead_bias, force_bin_by_removal, min_source_sentences, max_examples,
// validation_size, metric, metric_field, seed. Throws ConfigError.
void ApplyConfigValue(BuildConfig& config, std::string_view key,
                      std::string_view value);
void ApplyConfigText(BuildConfig& config, std::string_view text);
void ApplyConfigFile(BuildConfig& config, const std::filesystem::path& path);

// Fully resolved settings as key/value pairs; feeding them back through
// ApplyConfigValue reproduces the config.
std::vector<std::pair<std::string, std::string>> ConfigSnapshot(
    const BuildConfig& config);

struct SummarySplit {
  std::vector<Sentence> summary;    // document order
  std::vector<Sentence> remainder;  // document order
  std::vector<std::size_t> summary_indices;
};

// Returns std::nullopt when the document is shorter than
// config.EffectiveMinSourceSentences().
std::optional<SummarySplit> SelectSummary(const Document& doc,
                                          const BuildConfig& config);

// Index of the sentence with the highest self-ROUGE-1 (F1 or precision)
// against the concatenation of all other sentences; ties to the lower index.
std::size_t BestSelfRougeSentence(std::span<const Sentence> sentences,
                                  ScoreField field);

struct ReductionOutcome {
  bool rejected = false;
  std::vector<Sentence> reduced;
  // Oracle score before any removal, then after each removal.
  std::vector<double> trajectory;
  std::size_t removed = 0;
  OracleResult oracle;  // on `reduced`

  double final_score() const { return trajectory.back(); }
};

// Removes the highest-scoring remaining sentence until the oracle drops
// below target_bin.hi. Rejects when the score falls under target_bin.lo or
// another removal would leave fewer than M sentences.
ReductionOutcome ReduceToBin(std::span<const Sentence> remainder,
                             TokenSpan summary, const BuildConfig& config);

// Selected sentences first (in their original order), then the rest.
std::vector<std::size_t> LeadBiasOrder(std::size_t n,
                                       std::span<const std::size_t> selected);
std::vector<Sentence> ApplyLeadBias(std::span<const Sentence> remainder,
                                    const OracleResult& oracle);

enum class SkipReason {
  kEmptyDocument,
  kTooShort,
  kOutOfBin,
  kRejectedByRemoval,
};
inline constexpr std::size_t kSkipReasonCount = 4;

std::string_view SkipReasonName(SkipReason reason);

struct Provenance {
  std::string article_id;
  Selection selection = Selection::kFirstM;
  std::size_t removed_sentence_count = 0;
  bool lead_bias_applied = false;
};

struct PseudoPair {
  // Sentences joined with '\n' so that re-segmentation recovers them.
  std::string source;
  std::string summary;
  double oracle_score = 0.0;
  BinName bin = BinName::kCustom;
  Provenance provenance;

  std::size_t source_sentences = 0;
  std::size_t summary_sentences = 0;
  std::size_t source_tokens = 0;
  std::size_t summary_tokens = 0;
};

// {"source", "target", "oracle", "bin", "meta": {"article_id", "selection",
// "removed", "lead_bias"}} without a trailing newline.
std::string ToJsonLine(const PseudoPair& pair);

using ExampleResult = std::variant<PseudoPair, SkipReason>;

ExampleResult BuildExample(const Document& doc, const BuildConfig& config);

inline constexpr std::size_t kScoreHistogramBuckets = 20;

struct BuildReport {
  std::int64_t records_read = 0;
  std::int64_t malformed_records = 0;
  std::int64_t accepted = 0;
  std::int64_t train_count = 0;
  std::int64_t valid_count = 0;
  std::int64_t removed_sentences = 0;
  std::array<std::int64_t, kSkipReasonCount> skipped{};
  // Accepted oracle scores, buckets of width 1/20 over [0, 1].
  std::array<std::int64_t, kScoreHistogramBuckets> score_histogram{};
  // Mean of source tokens / summary tokens over accepted pairs.
  double mean_compression_ratio = 0.0;
  bool reached_cap = false;
  double wall_time_s = 0.0;

  std::int64_t skipped_count(SkipReason reason) const {
    return skipped[static_cast<std::size_t>(reason)];
  }
};

struct BuildOptions {
  int workers = 1;
  // Records per parallel batch. Independent of `workers` so that reports
  // do not depend on the degree of parallelism.
  std::size_t batch_size = 2048;
};

inline constexpr std::string_view kTrainFile = "train.jsonl";
inline constexpr std::string_view kValidFile = "valid.jsonl";

// Streams the corpus through segmentation and BuildExample, writing accepted
// pairs in corpus order to <out_dir>/train.jsonl and valid.jsonl. The
// validation pairs are the EffectiveValidationSize() accepted pairs with the
// smallest seeded hash of their article id. Output is byte-identical for any
// worker count. Throws std::runtime_error on I/O failure.
BuildReport BuildDataset(RecordSource& corpus, const BuildConfig& config,
                         const std::filesystem::path& out_dir,
                         const BuildOptions& options = {});

// Seeded key that orders accepted pairs for the validation split.
std::uint64_t ValidationKey(std::uint64_t seed, std::string_view article_id);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_BUILDER_H_
