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

#include "wikitransfer/backends.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "wikitransfer/hashing.h"

namespace wikitransfer {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr auto kDumpReplace = nlohmann::json::error_handler_t::replace;

std::string ReadWholeFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BackendError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string EncodeRequest(const TranslationRequest& request) {
  ordered_json j;
  j["texts"] = request.texts;
  j["src"] = request.src;
  j["tgt"] = request.tgt;
  j["beam"] = request.beam;
  j["nbest"] = request.nbest;
  return j.dump(-1, ' ', false, kDumpReplace);
}

TranslationRequest DecodeRequest(std::string_view body) {
  const json j = json::parse(body, nullptr, false);
  try {
    if (j.is_discarded() || !j.is_object()) throw BackendError("not an object");
    TranslationRequest r;
    r.texts = j.at("texts").get<std::vector<std::string>>();
    r.src = j.at("src").get<std::string>();
    r.tgt = j.at("tgt").get<std::string>();
    r.beam = j.at("beam").get<int>();
    r.nbest = j.at("nbest").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed translation request: ") + e.what());
  } catch (const BackendError& e) {
    throw BackendError(std::string("malformed translation request: ") + e.what());
  }
}

std::string EncodeResponse(const Hypotheses& hypotheses) {
  ordered_json j;
  j["hypotheses"] = hypotheses;
  return j.dump(-1, ' ', false, kDumpReplace);
}

Hypotheses DecodeResponse(std::string_view body,
                          const TranslationRequest& request) {
  const json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("hypotheses")) {
    throw BackendError("malformed translation response");
  }
  Hypotheses hyps;
  try {
    hyps = j.at("hypotheses").get<Hypotheses>();
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed translation response: ") + e.what());
  }
  if (hyps.size() != request.texts.size()) {
    throw BackendError("backend returned " + std::to_string(hyps.size()) +
                       " hypothesis lists for " +
                       std::to_string(request.texts.size()) + " texts");
  }
  for (const auto& list : hyps) {
    if (list.size() != static_cast<std::size_t>(request.nbest)) {
      throw BackendError("backend returned " + std::to_string(list.size()) +
                         " hypotheses, expected " +
                         std::to_string(request.nbest));
    }
  }
  return hyps;
}

Hypotheses IdentityBackend::Translate(const TranslationRequest& request) {
  Hypotheses out;
  out.reserve(request.texts.size());
  for (const std::string& text : request.texts) {
    out.emplace_back(static_cast<std::size_t>(request.nbest), text);
  }
  return out;
}

fs::path CachePath(const fs::path& dir, const TranslationRequest& request) {
  return dir / (Sha256Hex(EncodeRequest(request)) + ".json");
}

namespace {

std::optional<Hypotheses> LookupCache(const fs::path& dir,
                                      const TranslationRequest& request) {
  const fs::path path = CachePath(dir, request);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  const json entry = json::parse(ReadWholeFile(path), nullptr, false);
  if (entry.is_discarded() || !entry.contains("response")) {
    throw BackendError("corrupt cache entry " + path.string());
  }
  return DecodeResponse(entry["response"].dump(), request);
}

}  // namespace

RecordingBackend::RecordingBackend(std::unique_ptr<TranslationBackend> inner,
                                   fs::path cache_dir)
    : inner_(std::move(inner)), cache_dir_(std::move(cache_dir)) {
  std::error_code ec;
  fs::create_directories(cache_dir_, ec);
  if (ec) throw BackendError("cannot create cache " + cache_dir_.string());
}

Hypotheses RecordingBackend::Translate(const TranslationRequest& request) {
  if (auto cached = LookupCache(cache_dir_, request)) return *cached;
  Hypotheses hyps = inner_->Translate(request);
  ordered_json entry;
  entry["request"] = ordered_json::parse(EncodeRequest(request));
  entry["response"] = ordered_json::parse(EncodeResponse(hyps));
  const fs::path path = CachePath(cache_dir_, request);
  // Write-then-rename so concurrent writers of the same key never expose a
  // partial file.
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = cache_dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump(-1, ' ', false, kDumpReplace) << '\n';
    if (!out) throw BackendError("cannot write cache entry " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw BackendError("cannot store cache entry " + path.string());
  return hyps;
}

std::string RecordingBackend::Describe() const {
  return "record:" + cache_dir_.string() + "(" + inner_->Describe() + ")";
}

ReplayBackend::ReplayBackend(fs::path cache_dir)
    : cache_dir_(std::move(cache_dir)) {
  std::error_code ec;
  if (!fs::is_directory(cache_dir_, ec)) {
    throw BackendError("replay cache not found: " + cache_dir_.string());
  }
}

Hypotheses ReplayBackend::Translate(const TranslationRequest& request) {
  if (auto cached = LookupCache(cache_dir_, request)) return *cached;
  throw BackendError("replay cache miss for " +
                     CachePath(cache_dir_, request).filename().string());
}

std::string ReplayBackend::Describe() const {
  return "replay:" + cache_dir_.string();
}

HttpBackend::HttpBackend(std::string url, std::chrono::seconds timeout)
    : url_(std::move(url)), timeout_(timeout) {
  constexpr std::string_view kScheme = "http://";
  if (url_.rfind(kScheme, 0) != 0) {
    throw BackendError("only http:// URLs are supported: " + url_);
  }
  const std::size_t slash = url_.find('/', kScheme.size());
  origin_ = url_.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : url_.substr(slash);
}

Hypotheses HttpBackend::Translate(const TranslationRequest& request) {
  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  const auto res = client.Post(path_, EncodeRequest(request), "application/json");
  if (!res) {
    throw BackendError("http backend " + url_ + ": " +
                       httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw BackendError("http backend " + url_ + " returned status " +
                       std::to_string(res->status));
  }
  return DecodeResponse(res->body, request);
}

ExecBackend::ExecBackend(std::string command, std::chrono::seconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw BackendError(std::string("socketpair: ") + std::strerror(errno));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw BackendError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  fd_ = fds[0];
  pid_ = pid;
}

ExecBackend::~ExecBackend() {
  if (fd_ >= 0) {
    shutdown(fd_, SHUT_WR);
    close(fd_);
  }
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 200; ++i) {
      if (waitpid(pid_, &status, WNOHANG) == pid_) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
  }
}

std::string ExecBackend::ReadLine() {
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  while (true) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) throw BackendError("exec backend timed out");
    pollfd pfd{fd_, POLLIN, 0};
    const int ready = poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) throw BackendError("exec backend timed out");
    char chunk[65536];
    const ssize_t n = read(fd_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw BackendError("exec backend closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Hypotheses ExecBackend::Translate(const TranslationRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  if (fd_ < 0) throw BackendError("exec backend is not running");
  const std::string line = EncodeRequest(request) + "\n";
  std::size_t sent = 0;
  while (sent < line.size()) {
    const ssize_t n =
        send(fd_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      throw BackendError(std::string("exec backend write failed: ") +
                         std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
  return DecodeResponse(ReadLine(), request);
}

std::unique_ptr<TranslationBackend> MakeBackend(std::string_view descriptor) {
  const auto rest_after = [&](std::string_view prefix) {
    return std::string(descriptor.substr(prefix.size()));
  };
  if (descriptor == "mock" || descriptor == "identity") {
    return std::make_unique<IdentityBackend>();
  }
  if (descriptor.rfind("replay:", 0) == 0) {
    return std::make_unique<ReplayBackend>(rest_after("replay:"));
  }
  if (descriptor.rfind("http://", 0) == 0) {
    return std::make_unique<HttpBackend>(std::string(descriptor));
  }
  if (descriptor.rfind("http:", 0) == 0) {
    std::string url = rest_after("http:");
    if (url.find("://") == std::string::npos) url = "http://" + url;
    return std::make_unique<HttpBackend>(std::move(url));
  }
  if (descriptor.rfind("exec:", 0) == 0) {
    return std::make_unique<ExecBackend>(rest_after("exec:"));
  }
  throw std::invalid_argument("unknown backend '" + std::string(descriptor) +
                              "' (expected mock, replay:<dir>, http:<url> or "
                              "exec:<command>)");
}

}  // namespace wikitransfer
