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

#include <cstdint>
#include <span>
#include <vector>

namespace rwa {

struct SvmOptions {
  double C = 1.0;
  /// Value of the constant feature appended to every example. Its weight
  /// times this value is the bias, so the bias is regularized with strength
  /// 1 / bias_feature^2; larger values approach an unregularized offset.
  double bias_feature = 1.0;
  /// Stop once the largest projected-gradient violation drops below this
  /// and the relative duality gap is no larger.
  double tolerance = 1e-4;
  int max_epochs = 1000;
  /// Seeds the per-epoch coordinate permutation.
  std::uint64_t seed = 0;
};

/// A trained binary soft-margin SVM (L1 hinge loss).
struct SvmModel {
  Eigen::VectorXd weights;
  double bias = 0.0;
  Eigen::VectorXd dual_coefs;                // one per training example, in [0, C]
  std::vector<std::size_t> support_indices;  // { i : dual_coefs[i] > 1e-9 * C }
  double C = 1.0;
  double bias_feature = 1.0;
  int epochs = 0;
  bool converged = false;
  double max_violation = 0.0;

  double decision(const Eigen::Ref<const Eigen::VectorXd>& x) const { return weights.dot(x) + bias; }
};

/// Dual coordinate descent on
///   min 1/2 (|w|^2 + w_b^2) + C sum_i max(0, 1 - y_i (w.x_i + w_b * bias_feature))
/// with a fresh random coordinate order every epoch. `signs` holds +1/-1 per
/// example. Throws ContractError unless both signs are present and C > 0.
SvmModel train_binary(const Dataset& data, std::span<const int> signs, const SvmOptions& options);

/// The primal objective above evaluated at the model's (w, b).
double primal_objective(const SvmModel& model, const Dataset& data, std::span<const int> signs);

/// sum_i alpha_i y_i x_i, and the matching bias, recomputed from the duals.
Eigen::VectorXd weights_from_duals(const SvmModel& model, const Dataset& data, std::span<const int> signs);

/// 1 / |w|_2 with the bias excluded. Throws ContractError for w = 0.
double geometric_margin(const SvmModel& model);

/// The threshold for declaring a dual coefficient non-zero.
inline double support_tolerance(double C) { return 1e-9 * C; }

}  // namespace rwa
