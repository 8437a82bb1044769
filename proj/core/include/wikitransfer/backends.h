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

// Translation backends for round-trip augmentation.
//
// Wire protocol, one JSON object per request and per response:
//   request  {"texts": [...], "src": "en", "tgt": "de", "beam": 10, "nbest": 1}
//   response {"hypotheses": [[...nbest strings...], ...one list per text]}
// Subprocess backends exchange newline-delimited JSON over stdin/stdout;
// HTTP backends POST the request body and read the response body.

#ifndef WIKITRANSFER_BACKENDS_H_
#define WIKITRANSFER_BACKENDS_H_

#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wikitransfer {

struct TranslationRequest {
  std::vector<std::string> texts;
  std::string src;
  std::string tgt;
  int beam = 10;
  int nbest = 1;

  bool operator==(const TranslationRequest&) const = default;
};

// hypotheses[i] holds exactly nbest strings for texts[i].
using Hypotheses = std::vector<std::vector<std::string>>;

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Implementations must be safe to call from several threads at once.
class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  // Throws BackendError on transport failure or a malformed response.
  virtual Hypotheses Translate(const TranslationRequest& request) = 0;
  virtual std::string Describe() const = 0;
};

std::string EncodeRequest(const TranslationRequest& request);
// Throws BackendError.
TranslationRequest DecodeRequest(std::string_view body);
std::string EncodeResponse(const Hypotheses& hypotheses);
// Checks one list of exactly request.nbest strings per text. Throws
// BackendError.
Hypotheses DecodeResponse(std::string_view body,
                          const TranslationRequest& request);

// Returns every text unchanged, nbest times.
class IdentityBackend : public TranslationBackend {
 public:
  Hypotheses Translate(const TranslationRequest& request) override;
  std::string Describe() const override { return "mock"; }
};

// Cache file for a request: <dir>/<sha256 of the encoded request>.json.
std::filesystem::path CachePath(const std::filesystem::path& dir,
                                const TranslationRequest& request);

// Serves cached responses and forwards misses to `inner`, storing them.
class RecordingBackend : public TranslationBackend {
 public:
  RecordingBackend(std::unique_ptr<TranslationBackend> inner,
                   std::filesystem::path cache_dir);
  Hypotheses Translate(const TranslationRequest& request) override;
  std::string Describe() const override;

 private:
  std::unique_ptr<TranslationBackend> inner_;
  std::filesystem::path cache_dir_;
};

// Serves cached responses only; a miss is a BackendError.
class ReplayBackend : public TranslationBackend {
 public:
  explicit ReplayBackend(std::filesystem::path cache_dir);
  Hypotheses Translate(const TranslationRequest& request) override;
  std::string Describe() const override;

 private:
  std::filesystem::path cache_dir_;
};

// POSTs each request to an http:// URL.
class HttpBackend : public TranslationBackend {
 public:
  explicit HttpBackend(std::string url,
                       std::chrono::seconds timeout = std::chrono::seconds(600));
  Hypotheses Translate(const TranslationRequest& request) override;
  std::string Describe() const override { return "http:" + url_; }

 private:
  std::string url_;
  std::string origin_;  // scheme://host:port
  std::string path_;
  std::chrono::seconds timeout_;
};

// Runs `/bin/sh -c command` once and keeps it alive, exchanging one request
// line for one response line. Calls are serialized.
class ExecBackend : public TranslationBackend {
 public:
  explicit ExecBackend(std::string command,
                       std::chrono::seconds timeout = std::chrono::seconds(600));
  ~ExecBackend() override;
  ExecBackend(const ExecBackend&) = delete;
  ExecBackend& operator=(const ExecBackend&) = delete;

  Hypotheses Translate(const TranslationRequest& request) override;
  std::string Describe() const override { return "exec:" + command_; }

 private:
  std::string ReadLine();

  std::string command_;
  std::chrono::seconds timeout_;
  std::mutex mu_;
  int fd_ = -1;
  int pid_ = -1;
  std::string buffer_;
};

// "mock" | "replay:<dir>" | "http:<url>" | "exec:<command>". Throws
// std::invalid_argument for an unknown descriptor and BackendError when the
// backend cannot be started.
std::unique_ptr<TranslationBackend> MakeBackend(std::string_view descriptor);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_BACKENDS_H_
