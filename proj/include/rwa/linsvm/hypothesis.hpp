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
#include "rwa/linsvm/svm.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace rwa {

/// Per-class linear scores w_c . x + b_c. A binary hypothesis keeps two rows
/// with row 1 = -row 0, so argmax and additive combination need no special
/// case.
class LinearHypothesis {
 public:
  LinearHypothesis() = default;
  LinearHypothesis(Eigen::MatrixXd class_weights, Eigen::VectorXd class_biases);

  static LinearHypothesis zero(int n_classes, int n_features);
  /// Two mirrored rows; positive scores of (w, b) vote for class 1.
  static LinearHypothesis from_binary(const Eigen::VectorXd& w, double b);

  int n_classes() const { return static_cast<int>(weights_.rows()); }
  int n_features() const { return static_cast<int>(weights_.cols()); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  const Eigen::VectorXd& biases() const { return biases_; }

  friend bool operator==(const LinearHypothesis& a, const LinearHypothesis& b) {
    return a.weights_ == b.weights_ && a.biases_ == b.biases_;
  }

 private:
  Eigen::MatrixXd weights_;
  Eigen::VectorXd biases_;
};

/// n_examples x n_classes matrix of w_c . x_i + b_c.
Eigen::MatrixXd decision_scores(const LinearHypothesis& h, const Dataset& data);

/// Row-wise argmax with ties going to the lowest class id.
Labeling argmax_labels(const Eigen::Ref<const Eigen::MatrixXd>& scores);
Labeling predict(const LinearHypothesis& h, const Dataset& data);

/// Entrywise sum. Same argmax as the half-average.
LinearHypothesis combine(const LinearHypothesis& a, const LinearHypothesis& b);
inline LinearHypothesis operator+(const LinearHypothesis& a, const LinearHypothesis& b) { return combine(a, b); }

struct OvaFit {
  LinearHypothesis hypothesis;
  /// One model per class (class c vs rest); a single model for two classes.
  std::vector<SvmModel> models;
};

/// One-versus-all training. Two classes train one binary model (class 1 as
/// positive) and mirror it. Throws ContractError for fewer than two classes
/// or a class without examples.
OvaFit train_ova_models(const Dataset& data, std::span<const int> labels, int n_classes,
                        const SvmOptions& options);
LinearHypothesis train_ova(const Dataset& data, std::span<const int> labels, int n_classes,
                           const SvmOptions& options);
/// Uses the dataset's own labels and class count.
LinearHypothesis train_ova(const Dataset& labeled, const SvmOptions& options);

/// +1 where labels[i] == positive_class, else -1.
std::vector<int> one_vs_rest_signs(std::span<const int> labels, int positive_class);

/// Smallest per-class geometric margin of an OvA fit.
double ova_margin(const OvaFit& fit);

}  // namespace rwa
