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

#include "rwa/linsvm/svm.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace rwa {
namespace {

void check_signs(const Dataset& data, std::span<const int> signs) {
  if (signs.size() != data.n_examples()) {
    throw DimensionError("got " + std::to_string(signs.size()) + " signs for " +
                         std::to_string(data.n_examples()) + " examples");
  }
  bool pos = false;
  bool neg = false;
  for (int y : signs) {
    if (y == 1) {
      pos = true;
    } else if (y == -1) {
      neg = true;
    } else {
      throw ContractError("binary labels must be +1 or -1");
    }
  }
  if (!pos || !neg) throw ContractError("binary training needs examples of both signs");
}

// (P - D) / P for the current iterate. A small projected gradient alone
// still allows a gap of order n * C * tolerance.
double relative_duality_gap(const SparseRows& x, std::span<const int> signs, const Eigen::VectorXd& w, double wb,
                            double bf, const Eigen::VectorXd& alpha, double C) {
  const double half_norm = 0.5 * (w.squaredNorm() + wb * wb);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
    double margin = wb * bf;
    for (SparseRows::InnerIterator it(x, i); it; ++it) margin += w[it.col()] * it.value();
    loss += std::max(0.0, 1.0 - signs[static_cast<std::size_t>(i)] * margin);
  }
  const double primal = half_norm + C * loss;
  const double dual = alpha.sum() - half_norm;
  // relative to the dual value, which never exceeds the optimum, so the
  // stop rule bounds the primal suboptimality relative to the optimum
  if (!(dual > 0.0)) return std::numeric_limits<double>::infinity();
  return (primal - dual) / dual;
}

}  // namespace

SvmModel train_binary(const Dataset& data, std::span<const int> signs, const SvmOptions& options) {
  check_signs(data, signs);
  if (!(options.C > 0.0)) throw ContractError("C must be positive");
  if (!(options.bias_feature > 0.0)) throw ContractError("bias feature value must be positive");

  const auto& x = data.features();
  const auto n = static_cast<Eigen::Index>(data.n_examples());
  const double C = options.C;
  const double bf = options.bias_feature;

  Eigen::VectorXd qd(n);
  for (Eigen::Index i = 0; i < n; ++i) qd[i] = x.row(i).squaredNorm() + bf * bf;

  Eigen::VectorXd w = Eigen::VectorXd::Zero(x.cols());
  double wb = 0.0;  // weight of the augmented feature
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::mt19937_64 rng(options.seed);

  SvmModel model;
  for (model.epochs = 0; model.epochs < options.max_epochs;) {
    std::shuffle(order.begin(), order.end(), rng);
    double max_violation = 0.0;
    for (Eigen::Index i : order) {
      const double y = signs[static_cast<std::size_t>(i)];
      double margin = wb * bf;
      for (SparseRows::InnerIterator it(x, i); it; ++it) margin += w[it.col()] * it.value();
      const double g = y * margin - 1.0;

      double pg = g;
      if (alpha[i] <= 0.0) {
        pg = std::min(g, 0.0);
      } else if (alpha[i] >= C) {
        pg = std::max(g, 0.0);
      }
      max_violation = std::max(max_violation, std::abs(pg));
      if (pg == 0.0) continue;

      const double old = alpha[i];
      alpha[i] = std::clamp(old - g / qd[i], 0.0, C);
      const double step = (alpha[i] - old) * y;
      if (step == 0.0) continue;
      for (SparseRows::InnerIterator it(x, i); it; ++it) w[it.col()] += step * it.value();
      wb += step * bf;
    }
    ++model.epochs;
    model.max_violation = max_violation;
    if (max_violation < options.tolerance &&
        relative_duality_gap(x, signs, w, wb, bf, alpha, C) <= options.tolerance) {
      model.converged = true;
      break;
    }
  }

  model.C = C;
  model.bias_feature = bf;
  model.dual_coefs = std::move(alpha);
  // Rebuild (w, b) from the duals so they agree to rounding.
  model.weights = weights_from_duals(model, data, signs);
  double sb = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) sb += model.dual_coefs[i] * signs[static_cast<std::size_t>(i)];
  model.bias = sb * bf * bf;

  const double tol = support_tolerance(C);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (model.dual_coefs[i] > tol) model.support_indices.push_back(static_cast<std::size_t>(i));
  }
  return model;
}

Eigen::VectorXd weights_from_duals(const SvmModel& model, const Dataset& data, std::span<const int> signs) {
  const auto& x = data.features();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(x.cols());
  for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
    const double coef = model.dual_coefs[i] * signs[static_cast<std::size_t>(i)];
    if (coef == 0.0) continue;
    for (SparseRows::InnerIterator it(x, i); it; ++it) w[it.col()] += coef * it.value();
  }
  return w;
}

double primal_objective(const SvmModel& model, const Dataset& data, std::span<const int> signs) {
  const Eigen::VectorXd margins = data.features() * model.weights;
  double loss = 0.0;
  for (std::size_t i = 0; i < data.n_examples(); ++i) {
    const double f = margins[static_cast<Eigen::Index>(i)] + model.bias;
    loss += std::max(0.0, 1.0 - signs[i] * f);
  }
  const double wb = model.bias / model.bias_feature;
  return 0.5 * (model.weights.squaredNorm() + wb * wb) + model.C * loss;
}

double geometric_margin(const SvmModel& model) {
  const double norm = model.weights.norm();
  if (norm == 0.0) throw ContractError("margin undefined for a zero weight vector");
  return 1.0 / norm;
}

}  // namespace rwa
