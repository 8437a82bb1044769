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

#include <charconv>
#include <fstream>
#include <sstream>

#include "wikitransfer/corpus.h"

namespace wikitransfer {
namespace internal {
extern const std::string_view kAbbreviationData;
}  // namespace internal

namespace {

// Decodes one UTF-8 code point at `pos`. Invalid sequences decode as the raw
// byte with length 1, which keeps the tokenizer total on arbitrary input.
char32_t DecodeUtf8(std::string_view s, std::size_t pos, std::size_t* len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  *len = 1;
  if (b0 < 0x80) return b0;
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    return b0;
  }
  if (pos + extra >= s.size()) return b0;
  for (int i = 1; i <= extra; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return b0;
    cp = (cp << 6) | (b & 0x3F);
  }
  *len = 1 + extra;
  return cp;
}

bool IsAsciiAlnum(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

// Non-ASCII code points that separate tokens: Latin-1 punctuation and
// symbols, general punctuation, CJK punctuation and fullwidth ASCII
// punctuation.
bool IsNonAsciiSeparator(char32_t c) {
  return (c >= 0x80 && c <= 0xBF) || c == 0xD7 || c == 0xF7 ||
         (c >= 0x2000 && c <= 0x206F) || (c >= 0x2190 && c <= 0x2BFF) ||
         (c >= 0x3000 && c <= 0x303F) || (c >= 0xFE30 && c <= 0xFE4F) ||
         c == 0xFEFF || (c >= 0xFF01 && c <= 0xFF0F) ||
         (c >= 0xFF1A && c <= 0xFF20) || (c >= 0xFF3B && c <= 0xFF40) ||
         (c >= 0xFF5B && c <= 0xFF65);
}

bool IsTokenChar(char32_t c) {
  if (c < 0x80) return IsAsciiAlnum(c);
  return !IsNonAsciiSeparator(c);
}

bool HasToken(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len;
    if (IsTokenChar(DecodeUtf8(text, i, &len))) return true;
    i += len;
  }
  return false;
}

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }
bool IsNewline(char c) { return c == '\n' || c == '\r'; }
bool IsBlank(char c) {
  return c == ' ' || c == '\t' || c == '\f' || c == '\v';
}
bool IsSpace(char c) { return IsBlank(c) || IsNewline(c); }

bool IsOpeningQuote(char32_t c) {
  return c == '"' || c == '\'' || c == 0x201C || c == 0x2018 || c == 0xAB;
}

bool IsCloser(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x201D ||
         c == 0x2019 || c == 0xBB;
}

std::size_t SkipClosers(std::string_view text, std::size_t pos) {
  while (pos < text.size()) {
    std::size_t len;
    if (!IsCloser(DecodeUtf8(text, pos, &len))) break;
    pos += len;
  }
  return pos;
}

bool StartsSentence(std::string_view text, std::size_t pos) {
  std::size_t len;
  const char32_t c = DecodeUtf8(text, pos, &len);
  if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  if (IsOpeningQuote(c)) return true;
  // Latin-1 uppercase letters (À..Þ except ×).
  return c >= 0xC0 && c <= 0xDE && c != 0xD7;
}

std::string_view StripOpeners(std::string_view word) {
  while (!word.empty()) {
    std::size_t len;
    const char32_t c = DecodeUtf8(word, 0, &len);
    if (c == '(' || c == '[' || IsOpeningQuote(c)) {
      word.remove_prefix(len);
    } else {
      break;
    }
  }
  return word;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len;
    const char32_t c = DecodeUtf8(text, i, &len);
    if (IsTokenChar(c)) {
      if (len == 1) {
        char ch = text[i];
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
        current.push_back(ch);
      } else {
        current.append(text.substr(i, len));
      }
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    i += len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::unordered_set<std::string> ParseAbbreviationList(std::string_view data) {
  std::unordered_set<std::string> out;
  while (!data.empty()) {
    const std::size_t nl = data.find('\n');
    std::string_view line = data.substr(0, nl);
    data = nl == std::string_view::npos ? std::string_view() : data.substr(nl + 1);
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace(line);
  }
  return out;
}

int AbbreviationListVersion() {
  constexpr std::string_view kKey = "# version:";
  const std::string_view data = internal::kAbbreviationData;
  const std::size_t pos = data.find(kKey);
  if (pos == std::string_view::npos) return 0;
  std::string_view rest = data.substr(pos + kKey.size());
  rest = Trim(rest.substr(0, rest.find('\n')));
  int version = 0;
  std::from_chars(rest.data(), rest.data() + rest.size(), version);
  return version;
}

Segmenter::Segmenter()
    : abbreviations_(ParseAbbreviationList(internal::kAbbreviationData)) {}

Segmenter::Segmenter(std::unordered_set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

Segmenter Segmenter::FromAbbreviationFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read abbreviation list " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Segmenter(ParseAbbreviationList(buf.str()));
}

bool Segmenter::IsAbbreviation(std::string_view word) const {
  return abbreviations_.count(std::string(word)) > 0;
}

bool Segmenter::IsBoundaryPeriod(std::string_view text, std::size_t period_pos,
                                 std::size_t sentence_begin) const {
  std::size_t word_begin = period_pos;
  while (word_begin > sentence_begin && !IsSpace(text[word_begin - 1])) {
    --word_begin;
  }
  const std::string_view word =
      StripOpeners(text.substr(word_begin, period_pos - word_begin + 1));
  if (IsAbbreviation(word)) return false;
  // Single capital initial, e.g. "John F. Kennedy".
  if (word.size() == 2 && word[0] >= 'A' && word[0] <= 'Z') return false;
  return true;
}

std::vector<TextSpan> Segmenter::SplitSpans(std::string_view text) const {
  std::vector<TextSpan> raw;
  auto push = [&](std::size_t b, std::size_t e) {
    while (b < e && IsSpace(text[b])) ++b;
    while (e > b && IsSpace(text[e - 1])) --e;
    if (b < e) raw.push_back({b, e});
  };

  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (IsNewline(c)) {
      push(start, i);
      start = ++i;
      continue;
    }
    if (!IsTerminal(c)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && IsTerminal(text[j])) ++j;
    const bool lone_period = (j - i == 1) && c == '.';
    j = SkipClosers(text, j);
    if (j >= n || !IsBlank(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < n && IsBlank(text[k])) ++k;
    if (k >= n || IsNewline(text[k]) || !StartsSentence(text, k) ||
        (lone_period && !IsBoundaryPeriod(text, i, start))) {
      i = j;
      continue;
    }
    push(start, j);
    start = i = k;
  }
  push(start, n);

  // Fold token-less fragments into a neighbour so that every sentence has
  // at least one token and no text is lost.
  std::vector<TextSpan> spans;
  std::size_t pending_begin = std::string_view::npos;
  for (TextSpan span : raw) {
    if (HasToken(text.substr(span.begin, span.end - span.begin))) {
      if (pending_begin != std::string_view::npos) {
        span.begin = pending_begin;
        pending_begin = std::string_view::npos;
      }
      spans.push_back(span);
    } else if (!spans.empty()) {
      spans.back().end = span.end;
    } else if (pending_begin == std::string_view::npos) {
      pending_begin = span.begin;
    }
  }
  return spans;
}

std::vector<Sentence> Segmenter::SplitSentences(std::string_view text) const {
  std::vector<Sentence> out;
  for (const TextSpan& span : SplitSpans(text)) {
    Sentence s;
    s.raw.assign(text.substr(span.begin, span.end - span.begin));
    s.tokens = Tokenize(s.raw);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<Document> Segmenter::Segment(const ArticleRecord& record) const {
  std::vector<Sentence> sentences = SplitSentences(record.text);
  if (sentences.empty()) return std::nullopt;
  return Document(record.id, std::move(sentences));
}

const Segmenter& DefaultSegmenter() {
  static const Segmenter* const kSegmenter = new Segmenter();
  return *kSegmenter;
}

}  // namespace wikitransfer
