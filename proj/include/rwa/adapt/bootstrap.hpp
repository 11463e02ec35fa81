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
#include "rwa/labeling.hpp"

#include <Eigen/Core>

#include <random>
#include <string_view>
#include <vector>

namespace rwa {

/// What to do when the current labeling leaves a class without examples.
enum class EmptyClassPolicy {
  abort,       // throw; the walk is stuck in a single-class state
  top_scores,  // resample from the `quota` highest-scoring examples for the class
};

std::string_view to_string(EmptyClassPolicy policy);
EmptyClassPolicy parse_empty_class_policy(std::string_view name);

struct BootstrapSample {
  Dataset data;                      // labeled with class ids 0..n_classes-1
  std::vector<std::size_t> indices;  // source row of every sampled example
  std::vector<int> filled_classes;   // classes filled by the fallback policy
};

/// Draws exactly `quota` examples per class, uniformly with replacement from
/// the examples `y` assigns to that class. `scores` (n_examples x n_classes)
/// is only consulted by the top_scores fallback. Classes are drawn in id
/// order, so the sample is a deterministic function of the engine state.
BootstrapSample balanced_bootstrap(const Dataset& target, const Labeling& y, std::size_t quota,
                                   const Eigen::Ref<const Eigen::MatrixXd>& scores, EmptyClassPolicy policy,
                                   std::mt19937_64& rng);

/// Draws `size` examples uniformly with replacement from all of T, keeping
/// the labels `y` assigns to them.
BootstrapSample uniform_subsample(const Dataset& target, const Labeling& y, std::size_t size, std::mt19937_64& rng);

}  // namespace rwa
