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

#include "wikitransfer/profiler.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "parallel.h"
#include "wikitransfer/corpus.h"

namespace wikitransfer {

namespace {

constexpr double kTieTolerance = 1e-9;

struct PairStats {
  double doc_sentences;
  double summary_sentences;
  double compression;
  double oracle;
};

std::optional<PairStats> ScorePair(const LabeledPair& pair,
                                   const MetricConfig& metric) {
  const Segmenter& segmenter = DefaultSegmenter();
  const std::vector<Sentence> doc = segmenter.SplitSentences(pair.document);
  const std::vector<Sentence> summary = segmenter.SplitSentences(pair.summary);
  if (doc.empty() || summary.empty() || doc.size() < summary.size()) {
    return std::nullopt;
  }
  const std::vector<std::string> summary_tokens = ConcatTokens(summary);
  std::size_t doc_tokens = 0;
  for (const Sentence& s : doc) doc_tokens += s.tokens.size();
  const OracleResult oracle =
      TopMOracle(doc, summary_tokens, summary.size(), metric);
  return PairStats{static_cast<double>(doc.size()),
                   static_cast<double>(summary.size()),
                   static_cast<double>(doc_tokens) /
                       static_cast<double>(summary_tokens.size()),
                   oracle.joint_score};
}

// Sorting first makes the sum independent of input order.
double OrderFreeMean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

class ProfileAccumulator {
 public:
  explicit ProfileAccumulator(const ProfileOptions& options)
      : options_(options) {}

  void Add(std::span<const LabeledPair> pairs) {
    std::vector<std::optional<PairStats>> scored(pairs.size());
    internal::ParallelFor(pairs.size(), options_.workers, [&](std::size_t i) {
      scored[i] = ScorePair(pairs[i], options_.metric);
    });
    for (const auto& s : scored) {
      if (!s) {
        ++skipped_;
        continue;
      }
      doc_.push_back(s->doc_sentences);
      summary_.push_back(s->summary_sentences);
      compression_.push_back(s->compression);
      oracle_.push_back(s->oracle);
    }
  }

  void AddSkipped() { ++skipped_; }

  DatasetProfile Finish() const {
    if (oracle_.empty()) {
      throw ProfileError("no usable document/summary pair to profile");
    }
    DatasetProfile p;
    p.metric = options_.metric;
    p.sample_size = static_cast<std::int64_t>(oracle_.size());
    p.skipped = skipped_;
    p.mean_doc_sentences = OrderFreeMean(doc_);
    p.mean_summary_sentences = OrderFreeMean(summary_);
    p.mean_compression = OrderFreeMean(compression_);
    p.oracle_mean = OrderFreeMean(oracle_);
    for (double score : oracle_) {
      const auto bucket = std::min<std::size_t>(
          kProfileHistogramBuckets - 1,
          static_cast<std::size_t>(score * kProfileHistogramBuckets));
      ++p.oracle_histogram[bucket];
    }
    const BinSuggestion suggestion = SuggestBin(p.oracle_mean);
    p.suggested_bin = suggestion.bin;
    p.bin_clamped = suggestion.clamped;
    p.suggested_m = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(p.mean_summary_sentences)));
    return p;
  }

 private:
  ProfileOptions options_;
  std::vector<double> doc_, summary_, compression_, oracle_;
  std::int64_t skipped_ = 0;
};

}  // namespace

BinSuggestion SuggestBin(double oracle_mean) {
  const ExtractiveBin& lowest = kCanonicalBins.front();
  const ExtractiveBin& highest = kCanonicalBins.back();
  if (oracle_mean < lowest.lo) return {lowest, true};
  if (oracle_mean >= highest.hi) return {highest, true};

  const ExtractiveBin* best = nullptr;
  for (const ExtractiveBin& bin : kCanonicalBins) {
    if (!bin.Contains(oracle_mean)) continue;
    if (best == nullptr) {
      best = &bin;
      continue;
    }
    const double dw = bin.width() - best->width();
    if (dw < -kTieTolerance) {
      best = &bin;
      continue;
    }
    if (dw > kTieTolerance) continue;
    const double d_bin = std::abs(oracle_mean - (bin.lo + bin.hi) / 2);
    const double d_best = std::abs(oracle_mean - (best->lo + best->hi) / 2);
    // Bins are listed from abstractive to extractive, so a later bin wins a
    // full tie.
    if (d_bin <= d_best + kTieTolerance) best = &bin;
  }
  return {*best, false};
}

DatasetProfile Profile(std::span<const LabeledPair> pairs,
                       const ProfileOptions& options) {
  ProfileAccumulator acc(options);
  acc.Add(pairs);
  return acc.Finish();
}

DatasetProfile ProfileJsonl(const std::filesystem::path& path,
                            const ProfileOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot read " + path.string());
  ProfileAccumulator acc(options);
  constexpr std::size_t kBatch = 1024;
  std::vector<LabeledPair> batch;
  std::string line;
  std::int64_t line_no = 0;
  while (true) {
    const bool more = static_cast<bool>(std::getline(in, line));
    if (more) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || !j.contains("document") ||
          !j["document"].is_string() || !j.contains("summary") ||
          !j["summary"].is_string()) {
        std::cerr << "warning: " << path.string() << ":" << line_no
                  << ": expected string \"document\" and \"summary\"\n";
        acc.AddSkipped();
        continue;
      }
      batch.push_back({j["document"].get<std::string>(),
                       j["summary"].get<std::string>()});
    }
    if (batch.size() >= kBatch || (!more && !batch.empty())) {
      acc.Add(batch);
      batch.clear();
    }
    if (!more) break;
  }
  return acc.Finish();
}

std::string ProfileToJson(const DatasetProfile& p) {
  nlohmann::ordered_json j;
  j["sample_size"] = p.sample_size;
  j["skipped"] = p.skipped;
  j["mean_doc_sentences"] = p.mean_doc_sentences;
  j["mean_summary_sentences"] = p.mean_summary_sentences;
  j["mean_compression"] = p.mean_compression;
  j["oracle_mean"] = p.oracle_mean;
  j["oracle_histogram"] = p.oracle_histogram;
  j["suggested_bin"] = {{"name", BinNameString(p.suggested_bin.name)},
                        {"lo", p.suggested_bin.lo},
                        {"hi", p.suggested_bin.hi}};
  j["bin_clamped"] = p.bin_clamped;
  j["suggested_m"] = p.suggested_m;
  j["metric"] = {{"kind", MetricKindName(p.metric.kind)},
                 {"field", ScoreFieldName(p.metric.field)}};
  return j.dump(2);
}

std::string ProfileToTable(const DatasetProfile& p) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "pairs profiled         " << p.sample_size << "\n"
      << "pairs skipped          " << p.skipped << "\n"
      << "mean doc sentences     " << p.mean_doc_sentences << "\n"
      << "mean summary sentences " << p.mean_summary_sentences << "\n"
      << "mean compression       " << p.mean_compression << "\n"
      << "oracle mean            " << p.oracle_mean << "  ("
      << MetricKindName(p.metric.kind) << " " << ScoreFieldName(p.metric.field)
      << ")\n"
      << "suggested bin          " << BinNameString(p.suggested_bin.name) << " ["
      << std::setprecision(2) << p.suggested_bin.lo << ", "
      << p.suggested_bin.hi << ")" << (p.bin_clamped ? "  (clamped)" : "")
      << "\n"
      << "suggested m            " << p.suggested_m << "\n"
      << "oracle histogram\n";
  for (std::size_t b = 0; b < kProfileHistogramBuckets; ++b) {
    out << "  [" << std::setprecision(1) << b / 10.0 << ", " << (b + 1) / 10.0
        << (b + 1 == kProfileHistogramBuckets ? "]  " : ")  ")
        << p.oracle_histogram[b] << "\n";
  }
  return out.str();
}

}  // namespace wikitransfer
