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

#include "wikitransfer/oracle.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wikitransfer {

ExtractiveBin CanonicalBin(BinName name) {
  for (const ExtractiveBin& bin : kCanonicalBins) {
    if (bin.name == name) return bin;
  }
  throw std::invalid_argument("custom bins have no canonical bounds");
}

ExtractiveBin MakeBin(double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw std::invalid_argument("bin bounds must satisfy 0 <= lo < hi <= 1");
  }
  for (const ExtractiveBin& bin : kCanonicalBins) {
    if (std::abs(bin.lo - lo) < 1e-12 && std::abs(bin.hi - hi) < 1e-12) {
      return bin;
    }
  }
  return {BinName::kCustom, lo, hi};
}

std::string_view BinNameString(BinName name) {
  switch (name) {
    case BinName::kExtremelyAbstractive:
      return "extremely_abstractive";
    case BinName::kMoreAbstractive:
      return "more_abstractive";
    case BinName::kMoreExtractive:
      return "more_extractive";
    case BinName::kExtremelyExtractive:
      return "extremely_extractive";
    case BinName::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<BinName> ParseBinName(std::string_view name) {
  for (BinName n :
       {BinName::kExtremelyAbstractive, BinName::kMoreAbstractive,
        BinName::kMoreExtractive, BinName::kExtremelyExtractive,
        BinName::kCustom}) {
    if (BinNameString(n) == name) return n;
  }
  return std::nullopt;
}

std::optional<ExtractiveBin> ClassifyBin(double score,
                                         const ExtractiveBin& target) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw std::invalid_argument("oracle score outside [0, 1]");
  }
  if (target.Contains(score)) return target;
  return std::nullopt;
}

std::vector<ExtractiveBin> MatchingBins(double score,
                                        std::span<const ExtractiveBin> bins) {
  std::vector<ExtractiveBin> out;
  for (const ExtractiveBin& bin : bins) {
    if (ClassifyBin(score, bin)) out.push_back(bin);
  }
  return out;
}

std::vector<std::size_t> TopMIndices(std::span<const double> scores,
                                     std::size_t m) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  m = std::min(m, order.size());
  std::partial_sort(order.begin(), order.begin() + m, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  order.resize(m);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::string> ConcatTokens(std::span<const Sentence> sentences,
                                      std::span<const std::size_t> indices) {
  std::vector<std::string> out;
  for (std::size_t i : indices) {
    const auto& tokens = sentences[i].tokens;
    out.insert(out.end(), tokens.begin(), tokens.end());
  }
  return out;
}

std::vector<std::string> ConcatTokens(std::span<const Sentence> sentences) {
  std::vector<std::string> out;
  for (const Sentence& s : sentences) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

OracleResult TopMOracleFromScores(std::span<const Sentence> sentences,
                                  std::vector<double> individual_scores,
                                  TokenSpan summary, std::size_t m,
                                  const MetricConfig& metric) {
  if (m == 0) throw std::invalid_argument("oracle needs M >= 1");
  if (summary.empty()) throw std::invalid_argument("oracle needs a summary");
  if (sentences.size() < m) {
    throw TooShortError("document has " + std::to_string(sentences.size()) +
                        " sentences, oracle needs " + std::to_string(m));
  }
  if (individual_scores.size() != sentences.size()) {
    throw std::invalid_argument("one individual score per sentence required");
  }
  OracleResult result;
  result.selected_indices = TopMIndices(individual_scores, m);
  result.individual_scores = std::move(individual_scores);
  result.joint_score = OracleMetric(
      ConcatTokens(sentences, result.selected_indices), summary, metric);
  return result;
}

OracleResult TopMOracle(std::span<const Sentence> sentences, TokenSpan summary,
                        std::size_t m, const MetricConfig& metric) {
  if (m == 0) throw std::invalid_argument("oracle needs M >= 1");
  if (summary.empty()) throw std::invalid_argument("oracle needs a summary");
  if (sentences.size() < m) {
    throw TooShortError("document has " + std::to_string(sentences.size()) +
                        " sentences, oracle needs " + std::to_string(m));
  }
  const ReferenceScorer scorer(summary, metric);
  std::vector<double> scores;
  scores.reserve(sentences.size());
  for (const Sentence& s : sentences) scores.push_back(scorer.Score(s.tokens));
  return TopMOracleFromScores(sentences, std::move(scores), summary, m, metric);
}

}  // namespace wikitransfer
