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


#include "rwa/cli/manifest.hpp"

#include "rwa/data/read_audit.hpp"
#include "rwa/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <ctime>
#include <memory>

#ifndef RWA_VERSION
#define RWA_VERSION "0.0.0"
#endif

namespace rwa::cli {

std::string sha256_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("sha256 unavailable");

  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);

  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void RunManifest::add_input(std::string role, const std::filesystem::path& path) {
  inputs.push_back({std::move(role), path.string(), sha256_file(path)});
}

void RunManifest::start() {
  version = RWA_VERSION;
  started_at = utc_timestamp();
}

void RunManifest::finish() { finished_at = utc_timestamp(); }

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& d : m.inputs) inputs.push_back({{"role", d.role}, {"path", d.path}, {"sha256", d.sha256}});
  return {{"command", m.command}, {"args", m.args},         {"seed", m.seed},
          {"inputs", inputs},     {"version", m.version},   {"started_at", m.started_at},
          {"finished_at", m.finished_at}};
}

}  // namespace rwa::cli
