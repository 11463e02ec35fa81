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

#include "rwa/linsvm/cross_validation.hpp"

#include "rwa/error.hpp"
#include "rwa/linsvm/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace rwa {

std::vector<double> default_c_grid() { return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}; }

std::vector<int> stratified_folds(std::span<const int> labels, int n_classes, int folds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> fold_of(labels.size(), 0);
  for (int c = 0; c < n_classes; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) members.push_back(i);
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t k = 0; k < members.size(); ++k) fold_of[members[k]] = static_cast<int>(k % folds);
  }
  return fold_of;
}

CvResult cross_validate_c(const Dataset& data, std::span<const int> labels, int n_classes,
                          const CvOptions& options) {
  if (options.grid.empty()) throw ContractError("empty C grid");
  if (options.folds < 2) throw ContractError("cross-validation needs at least 2 folds");
  if (labels.size() != data.n_examples()) throw DimensionError("label count does not match example count");
  const auto counts = class_counts(labels, n_classes);
  for (int c = 0; c < n_classes; ++c) {
    if (counts[static_cast<std::size_t>(c)] < static_cast<std::size_t>(options.folds)) {
      throw ContractError("class " + std::to_string(c) + " has " + std::to_string(counts[static_cast<std::size_t>(c)]) +
                          " examples, fewer than " + std::to_string(options.folds) + " folds");
    }
  }

  const auto fold_of = stratified_folds(labels, n_classes, options.folds, options.seed);
  std::vector<std::vector<std::size_t>> train(static_cast<std::size_t>(options.folds));
  std::vector<std::vector<std::size_t>> test(static_cast<std::size_t>(options.folds));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int f = 0; f < options.folds; ++f) {
      (fold_of[i] == f ? test : train)[static_cast<std::size_t>(f)].push_back(i);
    }
  }

  CvResult result;
  for (double C : options.grid) {
    SvmOptions solver = options.solver;
    solver.C = C;
    double total = 0.0;
    for (int f = 0; f < options.folds; ++f) {
      const auto& tr = train[static_cast<std::size_t>(f)];
      const auto& te = test[static_cast<std::size_t>(f)];
      const Dataset train_set = data.select(tr);
      std::vector<int> train_labels;
      for (std::size_t i : tr) train_labels.push_back(labels[i]);
      const auto h = train_ova(train_set, train_labels, n_classes, solver);
      const auto predicted = predict(h, data.select(te));
      std::size_t correct = 0;
      for (std::size_t k = 0; k < te.size(); ++k) correct += predicted[k] == labels[te[k]];
      total += static_cast<double>(correct) / static_cast<double>(te.size());
    }
    result.mean_accuracy.push_back(total / options.folds);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < options.grid.size(); ++k) {
    const double gap = result.mean_accuracy[k] - result.mean_accuracy[best];
    if (gap > 1e-12 || (std::abs(gap) <= 1e-12 && options.grid[k] < options.grid[best])) best = k;
  }
  result.best_c = options.grid[best];
  return result;
}

}  // namespace rwa
