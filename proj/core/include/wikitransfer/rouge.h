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

// ROUGE-N and ROUGE-L over pre-tokenized text. No stemming, no stop words,
// single reference. ROUGE-L is the plain LCS of the two whole sequences.

#ifndef WIKITRANSFER_ROUGE_H_
#define WIKITRANSFER_ROUGE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wikitransfer {

using TokenSpan = std::span<const std::string>;

enum class MetricKind { kRouge1, kRouge2, kRougeL };
enum class ScoreField { kPrecision, kRecall, kF1 };

// The scalar used for oracle scoring, binning and sentence selection.
struct MetricConfig {
  MetricKind kind = MetricKind::kRouge1;
  ScoreField field = ScoreField::kF1;

  bool operator==(const MetricConfig&) const = default;
};

struct RougeScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 is 0 when precision + recall is 0.
  static RougeScores FromCounts(std::int64_t overlap,
                                std::int64_t candidate_total,
                                std::int64_t reference_total);

  double Get(ScoreField field) const;
};

RougeScores RougeN(TokenSpan candidate, TokenSpan reference, int n);
RougeScores RougeL(TokenSpan candidate, TokenSpan reference);
double OracleMetric(TokenSpan candidate, TokenSpan reference,
                    const MetricConfig& metric = {});

// Length of the longest common subsequence, O(|a|·|b|) time, O(|b|) space.
std::size_t LcsLength(TokenSpan a, TokenSpan b);

// N-gram multiset keyed by the n tokens joined with '\x1f'.
using NgramCounts = std::unordered_map<std::string, std::int32_t>;

NgramCounts CountNgrams(TokenSpan tokens, int n);
std::int64_t NgramTotal(TokenSpan tokens, int n);
// Sum over shared n-grams of min(count_a, count_b). Symmetric.
std::int64_t ClippedOverlap(const NgramCounts& a, const NgramCounts& b);

// Scores many candidates against one fixed reference without recounting the
// reference every time.
class ReferenceScorer {
 public:
  ReferenceScorer(TokenSpan reference, MetricConfig metric);

  RougeScores Scores(TokenSpan candidate) const;
  double Score(TokenSpan candidate) const {
    return Scores(candidate).Get(metric_.field);
  }
  const MetricConfig& metric() const { return metric_; }

 private:
  MetricConfig metric_;
  std::vector<std::string> reference_;
  NgramCounts reference_counts_;
  std::int64_t reference_total_ = 0;
};

std::string_view MetricKindName(MetricKind kind);      // "rouge1"...
std::string_view ScoreFieldName(ScoreField field);     // "precision"...
std::optional<MetricKind> ParseMetricKind(std::string_view name);
std::optional<ScoreField> ParseScoreField(std::string_view name);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_ROUGE_H_
