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

#include "wikitransfer/corpus.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace wikitransfer {

namespace fs = std::filesystem;
using nlohmann::json;

Document::Document(std::string id, std::vector<Sentence> sentences)
    : id_(std::move(id)), sentences_(std::move(sentences)) {
  for (const Sentence& s : sentences_) {
    if (s.tokens.empty()) {
      throw std::invalid_argument("document " + id_ +
                                  " contains a sentence without tokens");
    }
    token_count_ += s.tokens.size();
  }
}

std::string JoinSentences(const std::vector<Sentence>& sentences,
                          std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(sentences[i].raw);
  }
  return out;
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "plain-dir") return CorpusFormat::kPlainDir;
  return std::nullopt;
}

std::string_view CorpusFormatName(CorpusFormat format) {
  return format == CorpusFormat::kJsonl ? "jsonl" : "plain-dir";
}

CorpusFormat DetectCorpusFormat(const fs::path& path) {
  std::error_code ec;
  return fs::is_directory(path, ec) ? CorpusFormat::kPlainDir
                                    : CorpusFormat::kJsonl;
}

struct CorpusReader::Impl {
  CorpusFormat format;
  fs::path path;
  // jsonl
  std::ifstream in;
  std::string line;
  std::int64_t line_no = 0;
  // plain-dir
  std::vector<fs::path> files;
  std::size_t next_file = 0;
};

namespace {

void DefaultWarn(const std::string& message) {
  static int emitted = 0;
  constexpr int kMaxWarnings = 20;
  if (emitted < kMaxWarnings) {
    std::cerr << "warning: " << message << "\n";
  } else if (emitted == kMaxWarnings) {
    std::cerr << "warning: further malformed-record warnings suppressed\n";
  }
  ++emitted;
}

bool IsBlankLine(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

}  // namespace

CorpusReader::CorpusReader(const fs::path& path, CorpusFormat format,
                           WarningSink warn)
    : impl_(std::make_unique<Impl>()),
      warn_(warn ? std::move(warn) : WarningSink(DefaultWarn)) {
  impl_->format = format;
  impl_->path = path;
  std::error_code ec;
  if (format == CorpusFormat::kJsonl) {
    if (fs::is_directory(path, ec)) {
      throw CorpusError("expected a JSONL file but got a directory: " +
                        path.string());
    }
    impl_->in.open(path, std::ios::binary);
    if (!impl_->in) throw CorpusError("cannot open corpus " + path.string());
    return;
  }
  if (!fs::is_directory(path, ec)) {
    throw CorpusError("cannot open corpus directory " + path.string());
  }
  for (fs::directory_iterator it(path, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->path().extension() == ".txt" && it->is_regular_file(ec)) {
      impl_->files.push_back(it->path());
    }
  }
  if (ec) throw CorpusError("cannot list " + path.string() + ": " + ec.message());
  std::sort(impl_->files.begin(), impl_->files.end());
}

CorpusReader::~CorpusReader() = default;

std::optional<ArticleRecord> CorpusReader::Next() {
  Impl& s = *impl_;
  if (s.format == CorpusFormat::kJsonl) {
    while (std::getline(s.in, s.line)) {
      ++s.line_no;
      if (IsBlankLine(s.line)) continue;
      const json j = json::parse(s.line, nullptr, /*allow_exceptions=*/false);
      const auto where = s.path.string() + ":" + std::to_string(s.line_no);
      if (j.is_discarded() || !j.is_object()) {
        ++skipped_;
        warn_(where + ": not a JSON object");
        continue;
      }
      const auto id = j.find("id");
      const auto text = j.find("text");
      const auto title = j.find("title");
      if (id == j.end() || !id->is_string() || id->get_ref<const std::string&>().empty() ||
          text == j.end() || !text->is_string() ||
          (title != j.end() && !title->is_string())) {
        ++skipped_;
        warn_(where + ": record needs string \"id\" (nonempty) and \"text\"");
        continue;
      }
      ArticleRecord r;
      r.id = id->get<std::string>();
      r.text = text->get<std::string>();
      if (title != j.end()) r.title = title->get<std::string>();
      ++produced_;
      return r;
    }
    if (s.in.bad()) throw CorpusError("read error on " + s.path.string());
    return std::nullopt;
  }

  while (s.next_file < s.files.size()) {
    const fs::path& file = s.files[s.next_file++];
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      ++skipped_;
      warn_(file.string() + ": unreadable");
      continue;
    }
    ArticleRecord r;
    r.id = file.stem().string();
    std::getline(in, r.title);
    if (!r.title.empty() && r.title.back() == '\r') r.title.pop_back();
    std::ostringstream rest;
    rest << in.rdbuf();
    r.text = rest.str();
    ++produced_;
    return r;
  }
  return std::nullopt;
}

}  // namespace wikitransfer
