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

#include "rwa/linsvm/hypothesis.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rwa {

LinearHypothesis::LinearHypothesis(Eigen::MatrixXd class_weights, Eigen::VectorXd class_biases)
    : weights_(std::move(class_weights)), biases_(std::move(class_biases)) {
  if (weights_.rows() != biases_.size()) {
    throw DimensionError("hypothesis has " + std::to_string(weights_.rows()) + " weight rows but " +
                         std::to_string(biases_.size()) + " biases");
  }
  if (weights_.rows() < 2) throw DimensionError("a hypothesis needs at least two classes");
}

LinearHypothesis LinearHypothesis::zero(int n_classes, int n_features) {
  return {Eigen::MatrixXd::Zero(n_classes, n_features), Eigen::VectorXd::Zero(n_classes)};
}

LinearHypothesis LinearHypothesis::from_binary(const Eigen::VectorXd& w, double b) {
  Eigen::MatrixXd weights(2, w.size());
  weights.row(0) = -w.transpose();
  weights.row(1) = w.transpose();
  return {std::move(weights), Eigen::Vector2d(-b, b)};
}

Eigen::MatrixXd decision_scores(const LinearHypothesis& h, const Dataset& data) {
  if (h.n_features() != data.n_features()) {
    throw DimensionError("hypothesis expects " + std::to_string(h.n_features()) + " features, data has " +
                         std::to_string(data.n_features()));
  }
  Eigen::MatrixXd scores = data.features() * h.weights().transpose();
  scores.rowwise() += h.biases().transpose();
  return scores;
}

Labeling argmax_labels(const Eigen::Ref<const Eigen::MatrixXd>& scores) {
  std::vector<int> out(static_cast<std::size_t>(scores.rows()));
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < scores.cols(); ++c) {
      if (scores(i, c) > scores(i, best)) best = c;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return Labeling(std::move(out), static_cast<int>(scores.cols()));
}

Labeling predict(const LinearHypothesis& h, const Dataset& data) {
  return argmax_labels(decision_scores(h, data));
}

LinearHypothesis combine(const LinearHypothesis& a, const LinearHypothesis& b) {
  if (a.n_classes() != b.n_classes() || a.n_features() != b.n_features()) {
    throw DimensionError("cannot combine hypotheses of shape " + std::to_string(a.n_classes()) + "x" +
                         std::to_string(a.n_features()) + " and " + std::to_string(b.n_classes()) + "x" +
                         std::to_string(b.n_features()));
  }
  return {a.weights() + b.weights(), a.biases() + b.biases()};
}

std::vector<int> one_vs_rest_signs(std::span<const int> labels, int positive_class) {
  std::vector<int> signs(labels.size());
  std::transform(labels.begin(), labels.end(), signs.begin(),
                 [positive_class](int y) { return y == positive_class ? 1 : -1; });
  return signs;
}

OvaFit train_ova_models(const Dataset& data, std::span<const int> labels, int n_classes,
                        const SvmOptions& options) {
  if (n_classes < 2) throw ContractError("one-versus-all needs at least two classes");
  if (labels.size() != data.n_examples()) throw DimensionError("label count does not match example count");
  const auto counts = class_counts(labels, n_classes);
  for (int c = 0; c < n_classes; ++c) {
    if (counts[static_cast<std::size_t>(c)] == 0) {
      throw ContractError("class " + std::to_string(c) + " has no training examples");
    }
  }

  OvaFit fit;
  if (n_classes == 2) {
    const auto signs = one_vs_rest_signs(labels, 1);
    fit.models.push_back(train_binary(data, signs, options));
    fit.hypothesis = LinearHypothesis::from_binary(fit.models[0].weights, fit.models[0].bias);
    return fit;
  }

  Eigen::MatrixXd weights(n_classes, data.n_features());
  Eigen::VectorXd biases(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    const auto signs = one_vs_rest_signs(labels, c);
    fit.models.push_back(train_binary(data, signs, options));
    weights.row(c) = fit.models.back().weights.transpose();
    biases[c] = fit.models.back().bias;
  }
  fit.hypothesis = LinearHypothesis(std::move(weights), std::move(biases));
  return fit;
}

LinearHypothesis train_ova(const Dataset& data, std::span<const int> labels, int n_classes,
                           const SvmOptions& options) {
  return train_ova_models(data, labels, n_classes, options).hypothesis;
}

LinearHypothesis train_ova(const Dataset& labeled, const SvmOptions& options) {
  return train_ova(labeled, labeled.labels(), labeled.n_classes(), options);
}

double ova_margin(const OvaFit& fit) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& m : fit.models) margin = std::min(margin, geometric_margin(m));
  return margin;
}

}  // namespace rwa
