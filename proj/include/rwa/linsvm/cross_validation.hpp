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
#include "rwa/linsvm/svm.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rwa {

/// 1e-3, 1e-2, ..., 1e3.
std::vector<double> default_c_grid();

struct CvOptions {
  std::vector<double> grid = default_c_grid();
  int folds = 5;
  std::uint64_t seed = 0;
  /// Everything except C is taken from here.
  SvmOptions solver;
};

struct CvResult {
  double best_c = 0.0;
  std::vector<double> mean_accuracy;  // aligned with the grid
};

/// Stratified k-fold selection of C for one-versus-all training. Returns the
/// grid value with the highest mean fold accuracy, ties going to the smaller
/// C. Throws ContractError for an empty grid, folds < 2, or a class with
/// fewer examples than folds.
CvResult cross_validate_c(const Dataset& data, std::span<const int> labels, int n_classes,
                          const CvOptions& options);

/// Stratified fold id per example; deterministic in `seed`.
std::vector<int> stratified_folds(std::span<const int> labels, int n_classes, int folds, std::uint64_t seed);

}  // namespace rwa
