// Copyright 2026 The RWA Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rwa::cli {

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

struct InputDigest {
  std::string role;
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  std::vector<InputDigest> inputs;
  std::string version;
  std::string started_at;
  std::string finished_at;

  void add_input(std::string role, const std::filesystem::path& path);
  void start();
  void finish();
};

/// UTC, second resolution, ISO 8601.
std::string utc_timestamp();

nlohmann::json to_json(const RunManifest& manifest);

}  // namespace rwa::cli
