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

#ifndef WIKITRANSFER_HASHING_H_
#define WIKITRANSFER_HASHING_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace wikitransfer {

// 64-bit FNV-1a. Stable across platforms and standard libraries.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

// Incremental SHA-256, hex output.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void Update(std::string_view data);
  std::string HexDigest();

 private:
  struct Ctx;
  std::unique_ptr<Ctx> ctx_;
};

std::string Sha256Hex(std::string_view data);

// Digest over the contents of the given files and directories. Directories
// contribute every regular file below them, in lexicographic order of the
// relative path, with the relative path mixed in. Throws std::runtime_error
// on unreadable input.
std::string DigestPaths(std::span<const std::filesystem::path> paths);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_HASHING_H_
