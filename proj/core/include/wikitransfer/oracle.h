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

// Extractive oracle and extractiveness bins.
//
// The oracle scores every sentence on its own against the summary, keeps the
// M best (ties to the lower index) and reports the metric of those M
// sentences concatenated in document order. It is not a subset maximizer.

#ifndef WIKITRANSFER_ORACLE_H_
#define WIKITRANSFER_ORACLE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wikitransfer/corpus.h"
#include "wikitransfer/rouge.h"

namespace wikitransfer {

enum class BinName {
  kExtremelyAbstractive,
  kMoreAbstractive,
  kMoreExtractive,
  kExtremelyExtractive,
  // User-supplied bounds that match none of the named ranges.
  kCustom,
};

// Half-open score interval [lo, hi) on the 0..1 scale. The named ranges
// overlap, so membership is always tested against one target bin.
struct ExtractiveBin {
  BinName name = BinName::kCustom;
  double lo = 0.0;
  double hi = 1.0;

  bool Contains(double score) const { return lo <= score && score < hi; }
  double width() const { return hi - lo; }
  bool operator==(const ExtractiveBin&) const = default;
};

inline constexpr std::array<ExtractiveBin, 4> kCanonicalBins = {{
    {BinName::kExtremelyAbstractive, 0.10, 0.30},
    {BinName::kMoreAbstractive, 0.20, 0.30},
    {BinName::kMoreExtractive, 0.30, 0.50},
    {BinName::kExtremelyExtractive, 0.40, 0.60},
}};

// Throws std::invalid_argument for kCustom.
ExtractiveBin CanonicalBin(BinName name);
// Named bin when (lo, hi) matches one exactly, otherwise a kCustom bin.
// Throws std::invalid_argument unless 0 <= lo < hi <= 1.
ExtractiveBin MakeBin(double lo, double hi);

std::string_view BinNameString(BinName name);  // "extremely_abstractive"...
std::optional<BinName> ParseBinName(std::string_view name);

// Returns `target` if it contains `score`. Throws std::invalid_argument if
// score is outside [0, 1].
std::optional<ExtractiveBin> ClassifyBin(double score,
                                         const ExtractiveBin& target);
// Every bin of `bins` containing `score`, in input order.
std::vector<ExtractiveBin> MatchingBins(double score,
                                        std::span<const ExtractiveBin> bins);

struct OracleResult {
  // Ascending (document order), length M.
  std::vector<std::size_t> selected_indices;
  // One per input sentence.
  std::vector<double> individual_scores;
  double joint_score = 0.0;
};

class TooShortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws TooShortError when fewer than m sentences are given and
// std::invalid_argument when m == 0 or the summary is empty.
OracleResult TopMOracle(std::span<const Sentence> sentences, TokenSpan summary,
                        std::size_t m, const MetricConfig& metric = {});

// Same selection from individual scores that were already computed against
// `summary` with `metric`. Lets iterative callers skip rescoring.
OracleResult TopMOracleFromScores(std::span<const Sentence> sentences,
                                  std::vector<double> individual_scores,
                                  TokenSpan summary, std::size_t m,
                                  const MetricConfig& metric = {});

// Indices of the m largest scores, ties to the lower index, returned in
// ascending index order.
std::vector<std::size_t> TopMIndices(std::span<const double> scores,
                                     std::size_t m);

// Tokens of the given sentences concatenated in the given order.
std::vector<std::string> ConcatTokens(std::span<const Sentence> sentences,
                                      std::span<const std::size_t> indices);
std::vector<std::string> ConcatTokens(std::span<const Sentence> sentences);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_ORACLE_H_
