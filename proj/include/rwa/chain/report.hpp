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

#include "rwa/chain/state_space.hpp"
#include "rwa/chain/transitions.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace rwa {

inline constexpr const char* kMatrixFormat = "rwa.transition-matrix";

nlohmann::json to_json(const LabelingStateSpace& space);
nlohmann::json to_json(const TransitionMatrix& P, const LabelingStateSpace* space = nullptr);
nlohmann::json to_json(const PiiReport& report);

struct MatrixFile {
  TransitionMatrix matrix;
  std::optional<LabelingStateSpace> states;
};

/// Accepts {"p": [[...], ...]} with optional "states" (one class-id list per
/// row) and optional "overflow". Throws InputError on malformed documents.
MatrixFile matrix_from_json(const nlohmann::json& doc);
MatrixFile load_matrix_file(const std::filesystem::path& path);

}  // namespace rwa
