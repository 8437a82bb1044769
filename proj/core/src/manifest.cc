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

#include "wikitransfer/manifest.h"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#ifndef WIKITRANSFER_VERSION
#define WIKITRANSFER_VERSION "0.0.0"
#endif

namespace wikitransfer {

std::string_view ToolVersion() { return WIKITRANSFER_VERSION; }

std::string RunManifest::ToJson(bool include_wall_time) const {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["config_snapshot"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config_snapshot) j["config_snapshot"][key] = value;
  j["input_digest"] = input_digest;
  j["counters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : counters) j["counters"][key] = value;
  j["statistics"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : statistics) j["statistics"][key] = value;
  if (include_wall_time) j["wall_time_s"] = wall_time_s;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

void RunManifest::Write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << ToJson() << '\n';
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
}

}  // namespace wikitransfer
