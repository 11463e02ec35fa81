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
#include "rwa/data/dataset.hpp"
#include "rwa/labeling.hpp"
#include "rwa/linsvm/hypothesis.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

namespace rwa {

/// Row-stochastic matrix over labeling states. Estimated matrices also keep
/// the raw landing counts and the mass that left the state space.
struct TransitionMatrix {
  Eigen::MatrixXd p;
  /// Per-row probability of landing on a labeling outside the space.
  Eigen::VectorXd overflow;
  /// Draws per row; 0 for exact matrices.
  std::size_t sample_count = 0;
  /// counts[i][j] for j < size, counts[i][size] is the overflow count.
  std::vector<std::vector<std::size_t>> counts;
  /// Set when some row's overflow exceeds the configured fraction.
  bool overflow_warning = false;

  static TransitionMatrix exact(Eigen::MatrixXd p);
  std::size_t size() const { return static_cast<std::size_t>(p.rows()); }
  double max_overflow() const { return overflow.size() ? overflow.maxCoeff() : 0.0; }
};

struct StationaryDistribution {
  Eigen::VectorXd pi;
};

/// Solves pi P = pi. Throws ContractError when P is not row-stochastic
/// (overflow mass included), or the chain is reducible.
StationaryDistribution stationary(const TransitionMatrix& P);

/// s_m(Y^i) = pi(i) for every state of the space.
Eigen::VectorXd stability(const LabelingStateSpace& space, const TransitionMatrix& P);

enum class SubsampleScheme {
  class_balanced,  // quota draws per class, as the walk does
  uniform,         // quota * n_classes draws from all of T
};

struct TransitionOptions {
  std::size_t quota = 1;
  std::size_t draws = 1000;
  std::uint64_t seed = 0;
  SvmOptions solver;
  SubsampleScheme scheme = SubsampleScheme::class_balanced;
  /// overflow_warning is raised above this per-row fraction.
  double overflow_warning_fraction = 0.01;
};

/// One chain step from labeling `y`: subsample (T, y), train h_B, relabel T
/// by h_B + h_s. Uniform subsamples that miss a class are redrawn.
Labeling chain_step(const Dataset& target, const Labeling& y, const LinearHypothesis& h_s,
                    const TransitionOptions& options, std::mt19937_64& rng);

/// Monte-Carlo transition frequencies. Row i uses seed (options.seed ^ i).
TransitionMatrix estimate_transitions(const LabelingStateSpace& space, const Dataset& target,
                                      const LinearHypothesis& h_s, const TransitionOptions& options);

struct PiiReport {
  double p_ii_hat = 0.0;
  double bound = 0.0;
  std::size_t support_vectors = 0;  // d = |D_i|
  std::size_t n = 0;                // |T|
  std::size_t m = 0;                // quota * n_classes
  std::size_t draws = 0;
  /// Binomial standard deviation of the estimator if p_ii equalled the bound.
  double sigma = 0.0;
  /// 99% normal-approximation half-width around p_ii_hat.
  double half_width_99 = 0.0;

  bool consistent(double n_sigma = 3.0) const { return p_ii_hat >= bound - n_sigma * sigma; }
};

/// Checks p_ii >= P(D_i in B): trains the SVM on all of (T, y) to get its
/// support vectors, evaluates the containment bound with n = |T| and
/// m = quota * n_classes, and estimates p_ii by Monte Carlo.
/// Throws ContractError for draws < 100.
PiiReport verify_pii_bound(const Dataset& target, const Labeling& y, const LinearHypothesis& h_s,
                           const TransitionOptions& options);

}  // namespace rwa
