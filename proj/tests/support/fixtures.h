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


// Crafted documents shared by the unit tests and the acceptance suite.

#ifndef WIKITRANSFER_TESTS_SUPPORT_FIXTURES_H_
#define WIKITRANSFER_TESTS_SUPPORT_FIXTURES_H_

#include <array>

namespace wikitransfer::testing {

// Redundant article for the sentence-removal loop with M = 1 and the
// [0.20, 0.30) bin. The ROUGE-1 F1 trajectory below was computed with a
// separate script (plain Counter-based unigram overlap) and frozen:
// 12/22 -> 8/23 -> 6/22, ending after two removals with five sentences.
inline constexpr const char* kReductionSummary =
    "Storms damaged the northern seawall and engineers rebuilt it quickly.";

inline constexpr std::array<const char*, 7> kReductionRemainder = {
    "The town council met on Monday to discuss the annual budget.",
    "Engineers rebuilt the northern seawall quickly during a very wet spring "
    "season.",
    "Fishing boats returned to the harbor before dawn.",
    "Storms damaged roads and piers near the harbor, and officials closed the "
    "beach.",
    "Local schools reopened after the holiday break.",
    "Later that year engineers inspected the seawall again with two new "
    "sensors.",
    "Tourism recovered slowly over the summer months.",
};

inline constexpr std::array<double, 3> kReductionTrajectory = {
    0.5454545454545454, 0.34782608695652173, 0.2727272727272727};

}  // namespace wikitransfer::testing

#endif  // WIKITRANSFER_TESTS_SUPPORT_FIXTURES_H_
