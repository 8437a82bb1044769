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

#include "wikitransfer/rouge.h"

#include <algorithm>
#include <stdexcept>

namespace wikitransfer {

namespace {

int OrderOf(MetricKind kind) { return kind == MetricKind::kRouge2 ? 2 : 1; }

std::string NgramKey(TokenSpan tokens, std::size_t begin, int n) {
  if (n == 1) return tokens[begin];
  std::string key = tokens[begin];
  for (int k = 1; k < n; ++k) {
    key.push_back('\x1f');
    key.append(tokens[begin + k]);
  }
  return key;
}

}  // namespace

RougeScores RougeScores::FromCounts(std::int64_t overlap,
                                    std::int64_t candidate_total,
                                    std::int64_t reference_total) {
  RougeScores s;
  if (candidate_total <= 0 || reference_total <= 0 || overlap <= 0) return s;
  s.precision = static_cast<double>(overlap) / candidate_total;
  s.recall = static_cast<double>(overlap) / reference_total;
  s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

double RougeScores::Get(ScoreField field) const {
  switch (field) {
    case ScoreField::kPrecision:
      return precision;
    case ScoreField::kRecall:
      return recall;
    case ScoreField::kF1:
      return f1;
  }
  return f1;
}

std::int64_t NgramTotal(TokenSpan tokens, int n) {
  const auto size = static_cast<std::int64_t>(tokens.size());
  return size >= n ? size - n + 1 : 0;
}

NgramCounts CountNgrams(TokenSpan tokens, int n) {
  if (n < 1) throw std::invalid_argument("n-gram order must be >= 1");
  NgramCounts counts;
  const std::int64_t total = NgramTotal(tokens, n);
  counts.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    ++counts[NgramKey(tokens, static_cast<std::size_t>(i), n)];
  }
  return counts;
}

std::int64_t ClippedOverlap(const NgramCounts& a, const NgramCounts& b) {
  const NgramCounts& small = a.size() <= b.size() ? a : b;
  const NgramCounts& large = a.size() <= b.size() ? b : a;
  std::int64_t overlap = 0;
  for (const auto& [gram, count] : small) {
    const auto it = large.find(gram);
    if (it != large.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

RougeScores RougeN(TokenSpan candidate, TokenSpan reference, int n) {
  if (n < 1) throw std::invalid_argument("n-gram order must be >= 1");
  const std::int64_t cand_total = NgramTotal(candidate, n);
  const std::int64_t ref_total = NgramTotal(reference, n);
  if (cand_total == 0 || ref_total == 0) return {};
  return RougeScores::FromCounts(
      ClippedOverlap(CountNgrams(candidate, n), CountNgrams(reference, n)),
      cand_total, ref_total);
}

std::size_t LcsLength(TokenSpan a, TokenSpan b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diag = 0;  // row[j] from the previous i, before overwrite
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = a[i] == b[j] ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row[b.size()];
}

RougeScores RougeL(TokenSpan candidate, TokenSpan reference) {
  if (candidate.empty() || reference.empty()) return {};
  return RougeScores::FromCounts(
      static_cast<std::int64_t>(LcsLength(candidate, reference)),
      static_cast<std::int64_t>(candidate.size()),
      static_cast<std::int64_t>(reference.size()));
}

double OracleMetric(TokenSpan candidate, TokenSpan reference,
                    const MetricConfig& metric) {
  const RougeScores s = metric.kind == MetricKind::kRougeL
                            ? RougeL(candidate, reference)
                            : RougeN(candidate, reference, OrderOf(metric.kind));
  return s.Get(metric.field);
}

ReferenceScorer::ReferenceScorer(TokenSpan reference, MetricConfig metric)
    : metric_(metric) {
  if (metric_.kind == MetricKind::kRougeL) {
    reference_.assign(reference.begin(), reference.end());
  } else {
    const int n = OrderOf(metric_.kind);
    reference_counts_ = CountNgrams(reference, n);
    reference_total_ = NgramTotal(reference, n);
  }
}

RougeScores ReferenceScorer::Scores(TokenSpan candidate) const {
  if (metric_.kind == MetricKind::kRougeL) return RougeL(candidate, reference_);
  const int n = OrderOf(metric_.kind);
  const std::int64_t cand_total = NgramTotal(candidate, n);
  if (cand_total == 0 || reference_total_ == 0) return {};
  return RougeScores::FromCounts(
      ClippedOverlap(CountNgrams(candidate, n), reference_counts_), cand_total,
      reference_total_);
}

std::string_view MetricKindName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kRouge1:
      return "rouge1";
    case MetricKind::kRouge2:
      return "rouge2";
    case MetricKind::kRougeL:
      return "rougeL";
  }
  return "rouge1";
}

std::string_view ScoreFieldName(ScoreField field) {
  switch (field) {
    case ScoreField::kPrecision:
      return "precision";
    case ScoreField::kRecall:
      return "recall";
    case ScoreField::kF1:
      return "f1";
  }
  return "f1";
}

std::optional<MetricKind> ParseMetricKind(std::string_view name) {
  if (name == "rouge1" || name == "r1" || name == "R1") return MetricKind::kRouge1;
  if (name == "rouge2" || name == "r2" || name == "R2") return MetricKind::kRouge2;
  if (name == "rougeL" || name == "rl" || name == "RL") return MetricKind::kRougeL;
  return std::nullopt;
}

std::optional<ScoreField> ParseScoreField(std::string_view name) {
  if (name == "precision" || name == "p") return ScoreField::kPrecision;
  if (name == "recall" || name == "r") return ScoreField::kRecall;
  if (name == "f1" || name == "f") return ScoreField::kF1;
  return std::nullopt;
}

}  // namespace wikitransfer
