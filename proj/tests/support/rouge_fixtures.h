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


// Hand-computed ROUGE cases shared by the unit tests and the acceptance
// suite. Texts go through Tokenize() first.

#ifndef WIKITRANSFER_TESTS_SUPPORT_ROUGE_FIXTURES_H_
#define WIKITRANSFER_TESTS_SUPPORT_ROUGE_FIXTURES_H_

#include <array>

#include "wikitransfer/rouge.h"

namespace wikitransfer::testing {

struct RougeFixture {
  const char* candidate;
  const char* reference;
  MetricKind kind;
  double precision;
  double recall;
  double f1;
};

inline constexpr MetricKind R1 = MetricKind::kRouge1;
inline constexpr MetricKind R2 = MetricKind::kRouge2;
inline constexpr MetricKind RL = MetricKind::kRougeL;

inline constexpr std::array<RougeFixture, 26> kRougeFixtures = {{
    {"the cat sat", "the cat ran", R1, 2.0 / 3, 2.0 / 3, 2.0 / 3},
    {"the cat sat", "the cat ran", R2, 0.5, 0.5, 0.5},
    {"the cat sat", "the cat ran", RL, 2.0 / 3, 2.0 / 3, 2.0 / 3},
    // "the" is clipped to one match.
    {"the cat sat on the mat", "the cat ran", R1, 1.0 / 3, 2.0 / 3, 4.0 / 9},
    {"the cat ran", "the cat sat on the mat", R1, 2.0 / 3, 1.0 / 3, 4.0 / 9},
    {"the the the", "the cat", R1, 1.0 / 3, 0.5, 0.4},
    {"the cat", "the the the", R1, 0.5, 1.0 / 3, 0.4},
    {"a b c", "a x c", RL, 2.0 / 3, 2.0 / 3, 2.0 / 3},
    {"a b c", "a x c", R2, 0.0, 0.0, 0.0},
    {"a b c d", "d c b a", R1, 1.0, 1.0, 1.0},
    {"a b c d", "d c b a", RL, 0.25, 0.25, 0.25},
    {"a b c d", "d c b a", R2, 0.0, 0.0, 0.0},
    {"the quick brown fox", "the quick brown fox", R2, 1.0, 1.0, 1.0},
    {"", "the cat", R1, 0.0, 0.0, 0.0},
    // A single token has no bigram on either side.
    {"the", "the", R2, 0.0, 0.0, 0.0},
    {"the cat sat", "the", R2, 0.0, 0.0, 0.0},
    {"police killed the gunman", "police kill the gunman", R1, 0.75, 0.75,
     0.75},
    {"police killed the gunman", "police kill the gunman", R2, 1.0 / 3,
     1.0 / 3, 1.0 / 3},
    {"police killed the gunman", "police kill the gunman", RL, 0.75, 0.75,
     0.75},
    {"the gunman kill police", "police kill the gunman", RL, 0.5, 0.5, 0.5},
    {"a a b b", "a b a b", R2, 1.0 / 3, 1.0 / 3, 1.0 / 3},
    {"a a b b", "a b a b", RL, 0.75, 0.75, 0.75},
    {"one two three four five", "one three five", R1, 0.6, 1.0, 0.75},
    {"one two three four five", "one three five", RL, 0.6, 1.0, 0.75},
    {"The Cat, sat!", "the cat sat", R1, 1.0, 1.0, 1.0},
    {"a b a b a", "a b", R2, 0.25, 1.0, 0.4},
}};

}  // namespace wikitransfer::testing

#endif  // WIKITRANSFER_TESTS_SUPPORT_ROUGE_FIXTURES_H_
