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

#include "wikitransfer/augment.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"
#include "parallel.h"

namespace wikitransfer {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void AugmentConfig::Validate() const {
  if (languages.empty()) throw std::invalid_argument("no augmentation languages");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (beam < k) throw std::invalid_argument("beam must be >= k");
  if (max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
}

std::vector<TextSpan> TranslationUnits(std::string_view text,
                                       const Segmenter& segmenter) {
  std::vector<TextSpan> spans = segmenter.SplitSpans(text);
  if (!spans.empty()) return spans;
  std::size_t b = text.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string_view::npos) {
    throw std::invalid_argument("cannot translate blank text");
  }
  std::size_t e = text.find_last_not_of(" \t\r\n\f\v") + 1;
  return {{b, e}};
}

std::string Rejoin(std::string_view text, const std::vector<TextSpan>& spans,
                   const std::vector<std::string>& replacements) {
  if (spans.size() != replacements.size()) {
    throw std::invalid_argument("one replacement per span required");
  }
  std::string out;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    out.append(text.substr(cursor, spans[i].begin - cursor));
    out.append(replacements[i]);
    cursor = spans[i].end;
  }
  out.append(text.substr(cursor));
  return out;
}

std::int64_t ExpectedAugmentedTotal(std::int64_t n, int k,
                                    std::size_t languages) {
  return n + n * static_cast<std::int64_t>(k) * k *
                 static_cast<std::int64_t>(languages);
}

namespace {

Hypotheses TranslateWithRetry(TranslationBackend& backend,
                              const TranslationRequest& request,
                              int max_retries) {
  for (int attempt = 0;; ++attempt) {
    try {
      return backend.Translate(request);
    } catch (const BackendError&) {
      if (attempt >= max_retries) throw;
    }
  }
}

}  // namespace

std::vector<AugmentedExample> RoundTrip(const TextPair& pair,
                                        const AugmentConfig& config,
                                        TranslationBackend& backend,
                                        const Segmenter& segmenter) {
  config.Validate();
  const std::vector<TextSpan> source_units =
      TranslationUnits(pair.source, segmenter);
  const std::vector<TextSpan> target_units =
      TranslationUnits(pair.target, segmenter);
  const std::size_t n_source = source_units.size();
  const std::size_t k = static_cast<std::size_t>(config.k);

  std::vector<AugmentedExample> out;
  out.reserve(1 + config.languages.size() * k * k);
  out.push_back({pair.source, pair.target, pair.origin_id,
                 std::string(kOriginalLanguage), 0, 0});

  TranslationRequest forward;
  forward.src = config.pivot;
  forward.beam = config.beam;
  forward.nbest = 1;
  for (const TextSpan& s : source_units) {
    forward.texts.emplace_back(pair.source.substr(s.begin, s.end - s.begin));
  }
  for (const TextSpan& s : target_units) {
    forward.texts.emplace_back(pair.target.substr(s.begin, s.end - s.begin));
  }

  for (const std::string& language : config.languages) {
    std::vector<std::string> source_variants(k);
    std::vector<std::string> target_variants(k);
    try {
      forward.tgt = language;
      const Hypotheses pivot =
          TranslateWithRetry(backend, forward, config.max_retries);

      TranslationRequest backward;
      backward.src = language;
      backward.tgt = config.pivot;
      backward.beam = config.beam;
      backward.nbest = config.k;
      for (const auto& hyps : pivot) backward.texts.push_back(hyps.front());
      const Hypotheses back =
          TranslateWithRetry(backend, backward, config.max_retries);

      for (std::size_t h = 0; h < k; ++h) {
        std::vector<std::string> src_sentences;
        std::vector<std::string> tgt_sentences;
        for (std::size_t i = 0; i < back.size(); ++i) {
          (i < n_source ? src_sentences : tgt_sentences).push_back(back[i][h]);
        }
        source_variants[h] = Rejoin(pair.source, source_units, src_sentences);
        target_variants[h] = Rejoin(pair.target, target_units, tgt_sentences);
      }
    } catch (const BackendError& e) {
      throw PartialAugmentation("augmentation of '" + pair.origin_id +
                                    "' failed for language " + language +
                                    ": " + e.what(),
                                std::move(out));
    }
    for (std::size_t si = 0; si < k; ++si) {
      for (std::size_t ti = 0; ti < k; ++ti) {
        out.push_back({source_variants[si], target_variants[ti], pair.origin_id,
                       language, static_cast<int>(si), static_cast<int>(ti)});
      }
    }
  }
  return out;
}

namespace {

struct InputRecord {
  ordered_json object;
  TextPair pair;
};

std::string OriginId(const ordered_json& j, std::int64_t line_no) {
  if (auto it = j.find("id"); it != j.end() && it->is_string()) {
    return it->get<std::string>();
  }
  if (auto meta = j.find("meta"); meta != j.end() && meta->is_object()) {
    if (auto it = meta->find("article_id"); it != meta->end() && it->is_string()) {
      return it->get<std::string>();
    }
  }
  return "line-" + std::to_string(line_no);
}

std::string Serialize(ordered_json object, const AugmentedExample& ex) {
  object["source"] = ex.source;
  object["target"] = ex.target;
  ordered_json aug;
  aug["origin_id"] = ex.origin_id;
  aug["language"] = ex.language;
  aug["source_hyp"] = ex.source_hyp_index;
  aug["target_hyp"] = ex.target_hyp_index;
  object["aug"] = std::move(aug);
  return object.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::ofstream OpenForWrite(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

AugmentReport AugmentDataset(const fs::path& input, const AugmentConfig& config,
                             TranslationBackend& backend,
                             const fs::path& out_dir) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  std::ifstream in(input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read dataset " + input.string());
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string());

  const fs::path out_path = out_dir / kAugmentedFile;
  const fs::path staging = out_dir / ".variants.jsonl.tmp";
  AugmentReport report;
  {
    std::ofstream out = OpenForWrite(out_path);
    std::ofstream variants = OpenForWrite(staging);
    constexpr std::size_t kBatch = 256;
    std::vector<InputRecord> batch;
    std::vector<std::vector<AugmentedExample>> results;
    std::vector<char> failed;
    std::string line;
    std::int64_t line_no = 0;
    bool eof = false;
    while (!eof) {
      batch.clear();
      while (batch.size() < kBatch) {
        if (!std::getline(in, line)) {
          eof = true;
          break;
        }
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("source") ||
            !j["source"].is_string() || !j.contains("target") ||
            !j["target"].is_string()) {
          ++report.malformed_records;
          std::cerr << "warning: " << input.string() << ":" << line_no
                    << ": expected an object with string source and target\n";
          continue;
        }
        InputRecord rec;
        rec.pair = {OriginId(j, line_no), j["source"].get<std::string>(),
                    j["target"].get<std::string>()};
        rec.object = std::move(j);
        batch.push_back(std::move(rec));
      }
      if (batch.empty()) continue;

      results.assign(batch.size(), {});
      failed.assign(batch.size(), 0);
      internal::ParallelFor(batch.size(), config.workers, [&](std::size_t i) {
        try {
          results[i] = RoundTrip(batch[i].pair, config, backend);
        } catch (const PartialAugmentation& e) {
          failed[i] = 1;
          std::cerr << "warning: " << e.what() << "\n";
        } catch (const std::invalid_argument& e) {
          failed[i] = 1;
          std::cerr << "warning: '" << batch[i].pair.origin_id
                    << "' not augmented: " << e.what() << "\n";
        }
      });

      for (std::size_t i = 0; i < batch.size(); ++i) {
        const AugmentedExample original{
            batch[i].pair.source, batch[i].pair.target, batch[i].pair.origin_id,
            std::string(kOriginalLanguage), 0, 0};
        out << Serialize(batch[i].object, original) << '\n';
        ++report.originals;
        if (failed[i]) {
          ++report.failed_examples;
          continue;
        }
        for (std::size_t v = 1; v < results[i].size(); ++v) {
          variants << Serialize(batch[i].object, results[i][v]) << '\n';
          ++report.variants;
        }
      }
    }
    variants.close();
    if (fs::file_size(staging, ec) > 0) {
      std::ifstream staged(staging, std::ios::binary);
      out << staged.rdbuf();
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed on " + out_path.string());
  }
  fs::remove(staging, ec);

  report.total = report.originals + report.variants;
  report.expected_total = ExpectedAugmentedTotal(
      report.originals, config.k, config.languages.size());
  if (report.failed_examples == 0 && !report.count_law_holds()) {
    throw std::logic_error("augmentation produced " +
                           std::to_string(report.total) + " examples, expected " +
                           std::to_string(report.expected_total));
  }
  report.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

}  // namespace wikitransfer
