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

#include "rwa/chain/transitions.hpp"

#include "rwa/adapt/bootstrap.hpp"
#include "rwa/chain/bounds.hpp"
#include "rwa/chain/stationary.hpp"
#include "rwa/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rwa {
namespace {

constexpr int kMaxRedraws = 1000;

BootstrapSample draw_sample(const Dataset& target, const Labeling& y, const TransitionOptions& options,
                            std::mt19937_64& rng) {
  if (options.scheme == SubsampleScheme::class_balanced) {
    return balanced_bootstrap(target, y, options.quota, Eigen::MatrixXd(), EmptyClassPolicy::abort, rng);
  }
  const std::size_t size = options.quota * static_cast<std::size_t>(y.n_classes());
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    auto sample = uniform_subsample(target, y, size, rng);
    const auto counts = class_counts(sample.data.labels(), y.n_classes());
    if (std::find(counts.begin(), counts.end(), std::size_t{0}) == counts.end()) return sample;
  }
  throw ContractError("uniform subsamples keep missing a class; increase the quota");
}

}  // namespace

TransitionMatrix TransitionMatrix::exact(Eigen::MatrixXd p) {
  TransitionMatrix t;
  t.overflow = Eigen::VectorXd::Zero(p.rows());
  t.p = std::move(p);
  return t;
}

StationaryDistribution stationary(const TransitionMatrix& P) {
  if (P.overflow.size() != 0 && P.max_overflow() > 0.0) {
    throw ContractError("transition matrix leaks " + std::to_string(P.max_overflow()) +
                        " of a row's mass outside the state space");
  }
  return {stationary_distribution(P.p)};
}

Eigen::VectorXd stability(const LabelingStateSpace& space, const TransitionMatrix& P) {
  if (space.size() != P.size()) {
    throw DimensionError("state space has " + std::to_string(space.size()) + " states, matrix has " +
                         std::to_string(P.size()));
  }
  return stationary(P).pi;
}

Labeling chain_step(const Dataset& target, const Labeling& y, const LinearHypothesis& h_s,
                    const TransitionOptions& options, std::mt19937_64& rng) {
  const auto sample = draw_sample(target, y, options, rng);
  SvmOptions solver = options.solver;
  solver.seed = rng();
  const auto h_b = train_ova(sample.data, solver);
  return predict(combine(h_b, h_s), target);
}

TransitionMatrix estimate_transitions(const LabelingStateSpace& space, const Dataset& target,
                                      const LinearHypothesis& h_s, const TransitionOptions& options) {
  if (options.draws < 1) throw ContractError("need at least one draw per row");
  const std::size_t s = space.size();
  TransitionMatrix t;
  t.p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
  t.overflow = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(s));
  t.sample_count = options.draws;
  t.counts.assign(s, std::vector<std::size_t>(s + 1, 0));

  // Rows are independent; each has its own engine so the result does not
  // depend on evaluation order.
  for (std::size_t i = 0; i < s; ++i) {
    std::mt19937_64 rng(options.seed ^ static_cast<std::uint64_t>(i));
    for (std::size_t k = 0; k < options.draws; ++k) {
      const auto landing = space.find(chain_step(target, space.state(i), h_s, options, rng));
      ++t.counts[i][landing.value_or(s)];
    }
    const auto draws = static_cast<double>(options.draws);
    for (std::size_t j = 0; j < s; ++j) {
      t.p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(t.counts[i][j]) / draws;
    }
    t.overflow[static_cast<Eigen::Index>(i)] = static_cast<double>(t.counts[i][s]) / draws;
  }
  t.overflow_warning = t.max_overflow() > options.overflow_warning_fraction;
  return t;
}

PiiReport verify_pii_bound(const Dataset& target, const Labeling& y, const LinearHypothesis& h_s,
                           const TransitionOptions& options) {
  if (options.draws < 100) throw ContractError("verifying the bound needs at least 100 draws");
  if (y.n_classes() != 2) throw ContractError("the stability bound is checked for binary labelings only");

  const auto full = train_ova_models(target, y.assignments(), 2, options.solver);

  PiiReport r;
  r.support_vectors = full.models.front().support_indices.size();
  r.n = target.n_examples();
  r.m = options.quota * static_cast<std::size_t>(y.n_classes());
  r.draws = options.draws;
  r.bound = containment_bound(r.n, r.m, r.support_vectors);

  std::mt19937_64 rng(options.seed);
  std::size_t stays = 0;
  for (std::size_t k = 0; k < options.draws; ++k) stays += chain_step(target, y, h_s, options, rng) == y;

  const auto draws = static_cast<double>(options.draws);
  r.p_ii_hat = static_cast<double>(stays) / draws;
  r.sigma = std::sqrt(r.bound * (1.0 - r.bound) / draws);
  r.half_width_99 = 2.5758293035489004 * std::sqrt(r.p_ii_hat * (1.0 - r.p_ii_hat) / draws);
  return r;
}

}  // namespace rwa
