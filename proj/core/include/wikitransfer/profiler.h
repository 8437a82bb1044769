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

// Estimates the dataset characteristics the builder needs (summary length,
// compression, extractive-oracle level) from a labelled sample.

#ifndef WIKITRANSFER_PROFILER_H_
#define WIKITRANSFER_PROFILER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include "wikitransfer/oracle.h"
#include "wikitransfer/rouge.h"

namespace wikitransfer {

struct LabeledPair {
  std::string document;
  std::string summary;
};

struct ProfileOptions {
  MetricConfig metric;
  int workers = 1;
};

inline constexpr std::size_t kProfileHistogramBuckets = 10;

struct DatasetProfile {
  double mean_doc_sentences = 0.0;
  double mean_summary_sentences = 0.0;
  double mean_compression = 0.0;  // source tokens / summary tokens
  double oracle_mean = 0.0;
  // Buckets of width 0.1 over [0, 1]; a score of 1 lands in the last one.
  std::array<std::int64_t, kProfileHistogramBuckets> oracle_histogram{};
  ExtractiveBin suggested_bin;
  bool bin_clamped = false;  // oracle_mean was outside every named bin
  std::size_t suggested_m = 1;
  std::int64_t sample_size = 0;  // pairs scored
  std::int64_t skipped = 0;      // degenerate or malformed pairs
  MetricConfig metric;
};

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BinSuggestion {
  ExtractiveBin bin;
  bool clamped = false;
};

// Named bin containing `oracle_mean`. Among several, the narrowest wins, then
// the one whose midpoint is closest, then the more extractive one. Means
// below every bin clamp to extremely abstractive, above every bin to
// extremely extractive.
BinSuggestion SuggestBin(double oracle_mean);

// Each pair is segmented; M is its summary sentence count and the oracle is
// TopMOracle over the whole document. Pairs with an empty side or fewer
// document sentences than M are skipped. The result does not depend on pair
// order or worker count. Throws ProfileError when no pair is usable.
DatasetProfile Profile(std::span<const LabeledPair> pairs,
                       const ProfileOptions& options = {});

// Streams {"document", "summary"} JSONL. Malformed lines count as skipped.
// Throws ProfileError when the file cannot be read or has no usable pair.
DatasetProfile ProfileJsonl(const std::filesystem::path& path,
                            const ProfileOptions& options = {});

std::string ProfileToJson(const DatasetProfile& profile);
std::string ProfileToTable(const DatasetProfile& profile);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_PROFILER_H_
