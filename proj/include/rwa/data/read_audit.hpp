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

#include <filesystem>
#include <fstream>
#include <vector>

namespace rwa {

/// Opens a file for reading. Every path opened through here is reported to
/// the active ScopedReadAudit, if any.
std::ifstream open_for_reading(const std::filesystem::path& path);

/// Collects the paths opened by the library's loaders while alive. Only one
/// audit may be active at a time.
class ScopedReadAudit {
 public:
  ScopedReadAudit();
  ~ScopedReadAudit();
  ScopedReadAudit(const ScopedReadAudit&) = delete;
  ScopedReadAudit& operator=(const ScopedReadAudit&) = delete;

  std::vector<std::filesystem::path> paths() const;
};

}  // namespace rwa
