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

// Round-trip translation augmentation.
//
// Each text is split into sentences and every sentence goes English -> L
// (top-1) -> English (k hypotheses). Hypothesis h of every sentence forms
// variant h of the text, keeping the original inter-sentence whitespace.
// Source and target variants are paired exhaustively, so a dataset of N
// pairs grows to N + N * k^2 * |languages|.

#ifndef WIKITRANSFER_AUGMENT_H_
#define WIKITRANSFER_AUGMENT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wikitransfer/backends.h"
#include "wikitransfer/corpus.h"

namespace wikitransfer {

struct AugmentConfig {
  std::vector<std::string> languages = {"de", "ru"};
  int k = 10;
  int beam = 10;
  std::string pivot = "en";  // language of the dataset
  int max_retries = 2;       // extra attempts per backend call
  int workers = 1;           // examples augmented concurrently

  // Throws std::invalid_argument unless 1 <= k <= beam and languages is
  // nonempty.
  void Validate() const;
};

inline constexpr std::string_view kOriginalLanguage = "original";

struct TextPair {
  std::string origin_id;
  std::string source;
  std::string target;
};

struct AugmentedExample {
  std::string source;
  std::string target;
  std::string origin_id;
  std::string language;  // kOriginalLanguage for the untouched pair
  int source_hyp_index = 0;
  int target_hyp_index = 0;

  bool is_original() const { return language == kOriginalLanguage; }
};

// Raised when a backend call still fails after the retries. `completed`
// holds the original and the variants of every language finished before the
// failure.
class PartialAugmentation : public BackendError {
 public:
  PartialAugmentation(const std::string& what,
                      std::vector<AugmentedExample> completed)
      : BackendError(what), completed_(std::move(completed)) {}
  const std::vector<AugmentedExample>& completed() const { return completed_; }

 private:
  std::vector<AugmentedExample> completed_;
};

// Sentence spans used as translation units. A text without any sentence
// break yields one span over the trimmed text. Throws std::invalid_argument
// for blank text.
std::vector<TextSpan> TranslationUnits(std::string_view text,
                                       const Segmenter& segmenter);

// Replaces each span of `text` with the matching replacement.
std::string Rejoin(std::string_view text, const std::vector<TextSpan>& spans,
                   const std::vector<std::string>& replacements);

// Original first, then per language k*k variants ordered by (source
// hypothesis, target hypothesis).
std::vector<AugmentedExample> RoundTrip(
    const TextPair& pair, const AugmentConfig& config,
    TranslationBackend& backend,
    const Segmenter& segmenter = DefaultSegmenter());

std::int64_t ExpectedAugmentedTotal(std::int64_t n, int k,
                                    std::size_t languages);

struct AugmentReport {
  std::int64_t originals = 0;          // N
  std::int64_t variants = 0;
  std::int64_t failed_examples = 0;    // originals kept without variants
  std::int64_t malformed_records = 0;  // input lines skipped
  std::int64_t total = 0;              // lines written
  std::int64_t expected_total = 0;     // N + N k^2 |languages|
  double wall_time_s = 0.0;

  bool count_law_holds() const { return total == expected_total; }
};

inline constexpr std::string_view kAugmentedFile = "augmented.jsonl";

// Reads a builder-format JSONL dataset ("source"/"target" per line) and
// writes <out_dir>/augmented.jsonl: all originals first, then the variants
// grouped by origin. Every input field is kept; an "aug" object records
// origin_id, language, source_hyp and target_hyp. Throws std::runtime_error
// on I/O failure.
AugmentReport AugmentDataset(const std::filesystem::path& input,
                             const AugmentConfig& config,
                             TranslationBackend& backend,
                             const std::filesystem::path& out_dir);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_AUGMENT_H_
