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

#include "rwa/data/dataset.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace rwa {

enum class PreprocessKind {
  standardize,                     // (x - mean) / std, output is dense
  scale_by_std,                    // x / std, sparsity pattern preserved
  instance_mean_then_standardize,  // row / mean(stored values), then standardize
  rectify,                         // max(0, x), zeros dropped
};

std::string_view to_string(PreprocessKind kind);
PreprocessKind parse_preprocess_kind(std::string_view name);

/// One fitted step. `mean` and `scale` are empty for rectify; for
/// scale_by_std `mean` is kept for reporting but not applied. A feature with
/// zero spread has scale 1 so it passes through unchanged.
struct PreprocessStep {
  PreprocessKind kind;
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;
};

/// A chain of fitted steps. Each step's statistics are fitted on the output
/// of the previous ones, so a recipe fitted on one dataset can be replayed
/// verbatim on another with the same width.
class PreprocessRecipe {
 public:
  PreprocessRecipe() = default;

  static PreprocessRecipe fit(const std::vector<PreprocessKind>& kinds, const Dataset& data);
  static PreprocessRecipe fit(PreprocessKind kind, const Dataset& data) {
    return fit(std::vector<PreprocessKind>{kind}, data);
  }

  Dataset apply(const Dataset& data) const;

  const std::vector<PreprocessStep>& steps() const { return steps_; }
  int n_features() const { return n_features_; }
  bool preserves_sparsity() const;

 private:
  std::vector<PreprocessStep> steps_;
  int n_features_ = 0;
};

/// Parses "rectify,scale_by_std" style lists; empty string gives no steps.
std::vector<PreprocessKind> parse_preprocess_chain(std::string_view spec);

/// Per-feature mean and sample standard deviation (denominator n - 1) over
/// all examples, implicit zeros included.
struct FeatureMoments {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;
};
FeatureMoments feature_moments(const Dataset& data);

}  // namespace rwa
