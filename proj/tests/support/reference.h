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


// Deliberately naive re-implementations used as test oracles. They share no
// code with the library beyond the tokenizer and trade speed for obviousness.

#ifndef WIKITRANSFER_TESTS_SUPPORT_REFERENCE_H_
#define WIKITRANSFER_TESTS_SUPPORT_REFERENCE_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wikitransfer/builder.h"
#include "wikitransfer/rouge.h"

namespace wikitransfer::testing {

using Tokens = std::vector<std::string>;

// Plain recursion on (i, j) with no memoization. Exponential; keep inputs
// tiny.
std::size_t RecursiveLcs(const Tokens& a, const Tokens& b);

// Enumerates every subsequence of the shorter input recursively and keeps
// the longest one that is also a subsequence of the other.
std::size_t EnumeratedLcs(const Tokens& a, const Tokens& b);

struct NaiveScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Clipped n-gram overlap via std::map over materialized n-gram vectors.
NaiveScores NaiveRougeN(const Tokens& candidate, const Tokens& reference,
                        int n);
NaiveScores NaiveRougeL(const Tokens& candidate, const Tokens& reference);
double NaiveMetric(const Tokens& candidate, const Tokens& reference,
                   const MetricConfig& metric);

struct NaiveOracle {
  std::vector<std::size_t> selected;  // ascending
  std::vector<double> scores;
  double joint = 0.0;
};

// Scores every sentence, then tries every M-subset and keeps the one whose
// descending score list is lexicographically largest, breaking ties by the
// lexicographically smallest index list.
NaiveOracle ExhaustiveOracle(const std::vector<Tokens>& sentences,
                             const Tokens& summary, std::size_t m,
                             const MetricConfig& metric = {});

// Self-ROUGE-1 of sentence i against the explicit concatenation of every
// other sentence.
double NaiveSelfRouge(const std::vector<Tokens>& sentences, std::size_t i,
                      ScoreField field);

// Re-segments a builder output line and recomputes its oracle from scratch.
double RecomputePairOracle(const std::string& source_text,
                           const std::string& summary_text,
                           const MetricConfig& metric);

// Central difference of f at x along coordinate i.
double CentralDifference(const std::function<double(std::vector<double>)>& f,
                         std::vector<double> x, std::size_t i, double h);

std::vector<Tokens> TokensOf(const std::vector<Sentence>& sentences);

}  // namespace wikitransfer::testing

#endif  // WIKITRANSFER_TESTS_SUPPORT_REFERENCE_H_
