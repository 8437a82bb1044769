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

// Article records, sentence segmentation and tokenization.
//
// Every component of the pipeline tokenizes through Tokenize() so that
// segmentation, ROUGE scoring and profiling agree on what a token is.

#ifndef WIKITRANSFER_CORPUS_H_
#define WIKITRANSFER_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wikitransfer {

struct ArticleRecord {
  std::string id;
  std::string title;
  // Plain text; paragraphs separated by newlines.
  std::string text;
};

struct Sentence {
  std::string raw;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

// A segmented article. Immutable after construction, so it can be handed
// to worker threads freely.
class Document {
 public:
  Document() = default;
  Document(std::string id, std::vector<Sentence> sentences);

  const std::string& id() const { return id_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::size_t sentence_count() const { return sentences_.size(); }
  std::size_t token_count() const { return token_count_; }

 private:
  std::string id_;
  std::vector<Sentence> sentences_;
  std::size_t token_count_ = 0;
};

// Lowercases ASCII letters and splits on anything that is not a letter or
// digit. Non-ASCII code points count as letters unless they are Unicode
// punctuation or spaces. Empty tokens are never produced.
std::vector<std::string> Tokenize(std::string_view text);

// Byte offsets [begin, end) of one sentence within the segmented text.
struct TextSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Rule-based sentence splitter.
//
// A boundary is a run of '.', '!' or '?' (optionally followed by closing
// quotes or brackets), then whitespace, then an uppercase letter, a digit or
// an opening quote. A lone '.' ending a stop-listed abbreviation or a single
// capital initial is not a boundary. Newlines are always boundaries.
// Fragments without any token are merged into the preceding sentence (or the
// following one when they lead the text).
class Segmenter {
 public:
  // Uses the compiled-in abbreviation list.
  Segmenter();
  explicit Segmenter(std::unordered_set<std::string> abbreviations);

  static Segmenter FromAbbreviationFile(const std::filesystem::path& path);

  std::vector<TextSpan> SplitSpans(std::string_view text) const;
  std::vector<Sentence> SplitSentences(std::string_view text) const;

  // Returns std::nullopt when the record yields no sentence (empty document).
  std::optional<Document> Segment(const ArticleRecord& record) const;

  bool IsAbbreviation(std::string_view word) const;
  std::size_t abbreviation_count() const { return abbreviations_.size(); }

 private:
  bool IsBoundaryPeriod(std::string_view text, std::size_t period_pos,
                        std::size_t sentence_begin) const;

  std::unordered_set<std::string> abbreviations_;
};

// Shared instance built from the compiled-in list.
const Segmenter& DefaultSegmenter();

// Parses the abbreviation data file format: one entry per line, '#' comments.
std::unordered_set<std::string> ParseAbbreviationList(std::string_view data);

// Value of the "# version: N" line in the compiled-in list.
int AbbreviationListVersion();

// ---------------------------------------------------------------------------
// Corpus streaming.

enum class CorpusFormat { kJsonl, kPlainDir };

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);
std::string_view CorpusFormatName(CorpusFormat format);

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pull-based source of article records. Single consumer.
class RecordSource {
 public:
  virtual ~RecordSource() = default;
  virtual std::optional<ArticleRecord> Next() = 0;
  // Records rejected as malformed so far.
  virtual std::int64_t skipped() const { return 0; }
};

using WarningSink = std::function<void(const std::string&)>;

// Streams records from a JSONL file ({"id", "title", "text"} per line) or a
// directory of *.txt files (id = file stem, title = first line, text = the
// remaining lines). Directory entries are visited in lexicographic order.
// Malformed records are reported to the warning sink and skipped.
class CorpusReader : public RecordSource {
 public:
  // Throws CorpusError if the path cannot be opened.
  CorpusReader(const std::filesystem::path& path, CorpusFormat format,
               WarningSink warn = nullptr);
  ~CorpusReader() override;

  CorpusReader(const CorpusReader&) = delete;
  CorpusReader& operator=(const CorpusReader&) = delete;

  std::optional<ArticleRecord> Next() override;
  std::int64_t skipped() const override { return skipped_; }
  std::int64_t produced() const { return produced_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  WarningSink warn_;
  std::int64_t skipped_ = 0;
  std::int64_t produced_ = 0;
};

// Picks kPlainDir for directories and kJsonl otherwise.
CorpusFormat DetectCorpusFormat(const std::filesystem::path& path);

// In-memory source, mostly for tests and embedding.
class VectorRecordSource : public RecordSource {
 public:
  explicit VectorRecordSource(std::vector<ArticleRecord> records)
      : records_(std::move(records)) {}
  std::optional<ArticleRecord> Next() override {
    if (next_ >= records_.size()) return std::nullopt;
    return records_[next_++];
  }

 private:
  std::vector<ArticleRecord> records_;
  std::size_t next_ = 0;
};

// Joins sentence raw strings with `separator`.
std::string JoinSentences(const std::vector<Sentence>& sentences,
                          std::string_view separator = "\n");

}  // namespace wikitransfer

#endif  // WIKITRANSFER_CORPUS_H_
