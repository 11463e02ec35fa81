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

#include "rwa/data/preprocess.hpp"
#include "rwa/linsvm/hypothesis.hpp"
#include "rwa/linsvm/svm.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace rwa {

inline constexpr const char* kModelFormat = "rwa.linear-model";
inline constexpr int kModelVersion = 1;

/// What the adapter needs from the source side: the hypothesis, how raw
/// labels map to class ids, and how the features were preprocessed. Solver
/// metadata is carried along for provenance.
struct SourceModel {
  LinearHypothesis hypothesis;
  std::vector<double> class_values;
  SvmOptions solver;
  struct BinaryInfo {
    std::vector<std::size_t> support_indices;
    int epochs = 0;
    bool converged = false;
  };
  std::vector<BinaryInfo> binary_models;
  /// Recipe kinds; each domain is fitted with its own statistics.
  std::vector<PreprocessKind> preprocess;
};

SourceModel make_source_model(const OvaFit& fit, std::vector<double> class_values, const SvmOptions& solver,
                              std::vector<PreprocessKind> preprocess = {});

nlohmann::json to_json(const SourceModel& model);
/// Throws InputError when the document does not match the model schema.
SourceModel source_model_from_json(const nlohmann::json& doc);

void save_model(const SourceModel& model, const std::filesystem::path& path);
SourceModel load_model(const std::filesystem::path& path);

}  // namespace rwa
