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

#ifndef WIKITRANSFER_MANIFEST_H_
#define WIKITRANSFER_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wikitransfer {

std::string_view ToolVersion();

inline constexpr std::string_view kManifestFile = "manifest.json";

// Self-description written next to every run's outputs. Everything except
// wall_time_s is a function of the inputs and the resolved configuration.
struct RunManifest {
  std::string tool_version{ToolVersion()};
  std::string command;
  std::vector<std::pair<std::string, std::string>> config_snapshot;
  std::string input_digest;  // SHA-256 over the inputs
  std::vector<std::pair<std::string, std::int64_t>> counters;
  std::vector<std::pair<std::string, double>> statistics;
  double wall_time_s = 0.0;

  std::string ToJson(bool include_wall_time = true) const;
  // Throws std::runtime_error on I/O failure.
  void Write(const std::filesystem::path& path) const;
};

}  // namespace wikitransfer

#endif  // WIKITRANSFER_MANIFEST_H_
