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

#include "wikitransfer/builder.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "parallel.h"
#include "wikitransfer/hashing.h"

namespace wikitransfer {

namespace fs = std::filesystem;

std::string_view SkipReasonName(SkipReason reason) {
  switch (reason) {
    case SkipReason::kEmptyDocument:
      return "empty_document";
    case SkipReason::kTooShort:
      return "too_short";
    case SkipReason::kOutOfBin:
      return "out_of_bin";
    case SkipReason::kRejectedByRemoval:
      return "rejected_by_removal";
  }
  return "unknown";
}

std::size_t BestSelfRougeSentence(std::span<const Sentence> sentences,
                                  ScoreField field) {
  // Self-ROUGE-1 of sentence i uses the document unigram counts minus its
  // own as the reference, which equals scoring against the concatenation of
  // every other sentence.
  std::vector<NgramCounts> own;
  own.reserve(sentences.size());
  NgramCounts total;
  std::int64_t total_tokens = 0;
  for (const Sentence& s : sentences) {
    own.push_back(CountNgrams(s.tokens, 1));
    for (const auto& [gram, count] : own.back()) total[gram] += count;
    total_tokens += static_cast<std::int64_t>(s.tokens.size());
  }
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::int64_t overlap = 0;
    for (const auto& [gram, count] : own[i]) {
      const std::int32_t others = total.at(gram) - count;
      overlap += std::min(count, others);
    }
    const auto len = static_cast<std::int64_t>(sentences[i].tokens.size());
    const double score =
        RougeScores::FromCounts(overlap, len, total_tokens - len).Get(field);
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

std::optional<SummarySplit> SelectSummary(const Document& doc,
                                          const BuildConfig& config) {
  const std::size_t m = config.summary_sentences;
  const auto& sentences = doc.sentences();
  if (sentences.size() < config.EffectiveMinSourceSentences() ||
      sentences.size() < m) {
    return std::nullopt;
  }
  std::vector<std::size_t> picked;
  if (config.selection == Selection::kFirstM) {
    picked.resize(m);
    std::iota(picked.begin(), picked.end(), 0);
  } else {
    const ScoreField field = config.selection == Selection::kIndOrig
                                 ? ScoreField::kF1
                                 : ScoreField::kPrecision;
    std::vector<std::size_t> alive(sentences.size());
    std::iota(alive.begin(), alive.end(), 0);
    for (std::size_t round = 0; round < m; ++round) {
      std::vector<Sentence> current;
      current.reserve(alive.size());
      for (std::size_t i : alive) current.push_back(sentences[i]);
      const std::size_t best = BestSelfRougeSentence(current, field);
      picked.push_back(alive[best]);
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(best));
    }
    std::sort(picked.begin(), picked.end());
  }

  SummarySplit split;
  split.summary_indices = picked;
  std::vector<bool> in_summary(sentences.size(), false);
  for (std::size_t i : picked) in_summary[i] = true;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    (in_summary[i] ? split.summary : split.remainder).push_back(sentences[i]);
  }
  return split;
}

ReductionOutcome ReduceToBin(std::span<const Sentence> remainder,
                             TokenSpan summary, const BuildConfig& config) {
  const std::size_t m = config.summary_sentences;
  const ReferenceScorer scorer(summary, config.metric);
  ReductionOutcome out;
  out.reduced.assign(remainder.begin(), remainder.end());
  std::vector<double> scores;
  scores.reserve(remainder.size());
  for (const Sentence& s : remainder) scores.push_back(scorer.Score(s.tokens));

  // Individual scores do not change when other sentences are removed, so
  // only the joint score is recomputed per iteration.
  while (true) {
    out.oracle =
        TopMOracleFromScores(out.reduced, scores, summary, m, config.metric);
    out.trajectory.push_back(out.oracle.joint_score);
    if (out.oracle.joint_score < config.target_bin.hi) {
      out.rejected = out.oracle.joint_score < config.target_bin.lo;
      return out;
    }
    if (out.reduced.size() < m + 1) {
      out.rejected = true;
      return out;
    }
    const auto top = static_cast<std::ptrdiff_t>(
        std::max_element(scores.begin(), scores.end()) - scores.begin());
    out.reduced.erase(out.reduced.begin() + top);
    scores.erase(scores.begin() + top);
    ++out.removed;
  }
}

std::vector<std::size_t> LeadBiasOrder(std::size_t n,
                                       std::span<const std::size_t> selected) {
  std::vector<bool> is_selected(n, false);
  for (std::size_t i : selected) {
    if (i >= n) throw std::out_of_range("selected index outside document");
    is_selected[i] = true;
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_selected[i]) order.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_selected[i]) order.push_back(i);
  }
  return order;
}

std::vector<Sentence> ApplyLeadBias(std::span<const Sentence> remainder,
                                    const OracleResult& oracle) {
  std::vector<Sentence> out;
  out.reserve(remainder.size());
  for (std::size_t i : LeadBiasOrder(remainder.size(), oracle.selected_indices)) {
    out.push_back(remainder[i]);
  }
  return out;
}

ExampleResult BuildExample(const Document& doc, const BuildConfig& config) {
  if (doc.sentence_count() == 0) return SkipReason::kEmptyDocument;
  auto split = SelectSummary(doc, config);
  const std::size_t m = config.summary_sentences;
  if (!split || split->remainder.size() < m) return SkipReason::kTooShort;

  const std::vector<std::string> summary_tokens = ConcatTokens(split->summary);
  std::vector<Sentence> source = std::move(split->remainder);
  OracleResult oracle = TopMOracle(source, summary_tokens, m, config.metric);
  std::size_t removed = 0;

  if (oracle.joint_score >= config.target_bin.hi) {
    if (!config.force_bin_by_removal) return SkipReason::kOutOfBin;
    ReductionOutcome reduction = ReduceToBin(source, summary_tokens, config);
    if (reduction.rejected) return SkipReason::kRejectedByRemoval;
    source = std::move(reduction.reduced);
    oracle = std::move(reduction.oracle);
    removed = reduction.removed;
  } else if (oracle.joint_score < config.target_bin.lo) {
    return SkipReason::kOutOfBin;
  }

  if (config.lead_bias) source = ApplyLeadBias(source, oracle);

  PseudoPair pair;
  pair.source = JoinSentences(source);
  pair.summary = JoinSentences(split->summary);
  pair.oracle_score = oracle.joint_score;
  pair.bin = config.target_bin.name;
  pair.provenance = {doc.id(), config.selection, removed, config.lead_bias};
  pair.source_sentences = source.size();
  pair.summary_sentences = split->summary.size();
  for (const Sentence& s : source) pair.source_tokens += s.tokens.size();
  pair.summary_tokens = summary_tokens.size();
  return pair;
}

std::string ToJsonLine(const PseudoPair& pair) {
  nlohmann::ordered_json j;
  j["source"] = pair.source;
  j["target"] = pair.summary;
  j["oracle"] = pair.oracle_score;
  j["bin"] = BinNameString(pair.bin);
  j["meta"]["article_id"] = pair.provenance.article_id;
  j["meta"]["selection"] = SelectionName(pair.provenance.selection);
  j["meta"]["removed"] = pair.provenance.removed_sentence_count;
  j["meta"]["lead_bias"] = pair.provenance.lead_bias_applied;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::uint64_t ValidationKey(std::uint64_t seed, std::string_view article_id) {
  char seed_bytes[8];
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<char>((seed >> (8 * i)) & 0xFF);
  }
  return Fnv1a64(article_id, Fnv1a64(std::string_view(seed_bytes, 8)));
}

namespace {

std::ofstream OpenForWrite(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

BuildReport BuildDataset(RecordSource& corpus, const BuildConfig& config,
                         const fs::path& out_dir, const BuildOptions& options) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + out_dir.string() + ": " +
                             ec.message());
  }

  BuildReport report;
  const fs::path staging = out_dir / ".accepted.jsonl.tmp";
  std::vector<std::pair<std::uint64_t, std::int64_t>> keys;
  double compression_sum = 0.0;
  const Segmenter& segmenter = DefaultSegmenter();
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

  {
    std::ofstream staged = OpenForWrite(staging);
    std::vector<ArticleRecord> batch;
    std::vector<ExampleResult> results;
    bool done = false;
    while (!done) {
      batch.clear();
      while (batch.size() < batch_size) {
        auto record = corpus.Next();
        if (!record) break;
        batch.push_back(std::move(*record));
      }
      if (batch.empty()) break;

      results.assign(batch.size(), SkipReason::kEmptyDocument);
      internal::ParallelFor(batch.size(), options.workers, [&](std::size_t i) {
        const std::optional<Document> doc = segmenter.Segment(batch[i]);
        results[i] = doc ? BuildExample(*doc, config)
                         : ExampleResult(SkipReason::kEmptyDocument);
      });

      for (std::size_t i = 0; i < results.size(); ++i) {
        ++report.records_read;
        if (const auto* reason = std::get_if<SkipReason>(&results[i])) {
          ++report.skipped[static_cast<std::size_t>(*reason)];
          continue;
        }
        const auto& pair = std::get<PseudoPair>(results[i]);
        staged << ToJsonLine(pair) << '\n';
        keys.emplace_back(ValidationKey(config.seed, pair.provenance.article_id),
                          report.accepted);
        ++report.accepted;
        report.removed_sentences +=
            static_cast<std::int64_t>(pair.provenance.removed_sentence_count);
        compression_sum += static_cast<double>(pair.source_tokens) /
                           static_cast<double>(pair.summary_tokens);
        const auto bucket = std::min<std::size_t>(
            kScoreHistogramBuckets - 1,
            static_cast<std::size_t>(pair.oracle_score * kScoreHistogramBuckets));
        ++report.score_histogram[bucket];
        if (config.max_examples && report.accepted >= *config.max_examples) {
          report.reached_cap = true;
          done = true;
          break;
        }
      }
    }
    staged.flush();
    if (!staged) throw std::runtime_error("write failed on " + staging.string());
  }
  report.malformed_records = corpus.skipped();
  if (report.accepted > 0) {
    report.mean_compression_ratio = compression_sum / report.accepted;
  }

  // Validation membership: the smallest seeded keys, ordinal breaking ties.
  const auto valid_target = static_cast<std::size_t>(
      std::min<std::int64_t>(config.EffectiveValidationSize(), report.accepted));
  std::vector<bool> is_valid(keys.size(), false);
  if (valid_target > 0) {
    std::nth_element(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(valid_target - 1),
                     keys.end());
    for (std::size_t i = 0; i < valid_target; ++i) {
      is_valid[static_cast<std::size_t>(keys[i].second)] = true;
    }
  }

  {
    std::ifstream staged(staging, std::ios::binary);
    if (!staged) throw std::runtime_error("cannot reopen " + staging.string());
    std::ofstream train = OpenForWrite(out_dir / kTrainFile);
    std::ofstream valid = OpenForWrite(out_dir / kValidFile);
    std::string line;
    for (std::size_t ordinal = 0; std::getline(staged, line); ++ordinal) {
      if (is_valid[ordinal]) {
        valid << line << '\n';
        ++report.valid_count;
      } else {
        train << line << '\n';
        ++report.train_count;
      }
    }
    if (!train || !valid) throw std::runtime_error("write failed in " + out_dir.string());
  }
  fs::remove(staging, ec);

  report.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

}  // namespace wikitransfer
