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

#include "rwa/data/dataset.hpp"

#include "rwa/error.hpp"

#include <Eigen/Core>

#include <string>

namespace rwa {
namespace {

void canonicalize(SparseRows& m) {
  m.prune(0.0, 0.0);
  m.makeCompressed();
}

void check_labels(const std::vector<int>& labels, std::size_t n_examples, std::size_t n_classes) {
  if (labels.size() != n_examples) {
    throw DimensionError("label vector has " + std::to_string(labels.size()) +
                         " entries for " + std::to_string(n_examples) + " examples");
  }
  for (int y : labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= n_classes) {
      throw DimensionError("class id " + std::to_string(y) + " outside [0, " +
                           std::to_string(n_classes) + ")");
    }
  }
}

}  // namespace

Dataset::Dataset(SparseRows features) : features_(std::move(features)) {
  canonicalize(features_);
}

Dataset::Dataset(SparseRows features, std::vector<int> labels, std::vector<double> class_values)
    : features_(std::move(features)), class_values_(std::move(class_values)) {
  canonicalize(features_);
  check_labels(labels, n_examples(), class_values_.size());
  labels_ = std::move(labels);
}

Dataset Dataset::from_rows(const std::vector<std::vector<std::pair<int, double>>>& rows,
                           int n_features) {
  std::vector<Eigen::Triplet<double, int>> triplets;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int previous = -1;
    for (auto [j, v] : rows[i]) {
      if (j < 0 || j >= n_features) {
        throw DimensionError("feature index " + std::to_string(j) + " outside [0, " +
                             std::to_string(n_features) + ")");
      }
      if (j <= previous) throw DimensionError("feature indices must be strictly increasing");
      previous = j;
      if (v != 0.0) triplets.emplace_back(static_cast<int>(i), j, v);
    }
  }
  SparseRows m(static_cast<Eigen::Index>(rows.size()), n_features);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return Dataset(std::move(m));
}

Dataset Dataset::from_dense(const Eigen::MatrixXd& dense) {
  SparseRows m = dense.sparseView(0.0, 0.0);
  return Dataset(std::move(m));
}

const std::vector<int>& Dataset::labels() const {
  if (!labels_) throw ContractError("dataset has no labels");
  return *labels_;
}

Dataset Dataset::with_labels(std::vector<int> labels, std::vector<double> class_values) const {
  return Dataset(features_, std::move(labels), std::move(class_values));
}

Dataset Dataset::without_labels() const { return Dataset(features_); }

Dataset Dataset::with_n_features(int n_features) const {
  if (n_features < this->n_features()) {
    throw DimensionError("cannot narrow dataset from " + std::to_string(this->n_features()) +
                         " to " + std::to_string(n_features) + " features");
  }
  SparseRows m = features_;
  m.conservativeResize(features_.rows(), n_features);
  Dataset out = *this;
  out.features_ = std::move(m);
  out.features_.makeCompressed();
  return out;
}

Dataset Dataset::select(std::span<const std::size_t> rows) const {
  SparseRows m(static_cast<Eigen::Index>(rows.size()), features_.cols());
  Eigen::VectorXi nnz(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= n_examples()) throw DimensionError("row index out of range");
    const auto r = static_cast<Eigen::Index>(rows[k]);
    nnz[static_cast<Eigen::Index>(k)] =
        static_cast<int>(features_.outerIndexPtr()[r + 1] - features_.outerIndexPtr()[r]);
  }
  m.reserve(nnz);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (SparseRows::InnerIterator it(features_, static_cast<Eigen::Index>(rows[k])); it; ++it) {
      m.insert(static_cast<Eigen::Index>(k), it.col()) = it.value();
    }
  }
  m.makeCompressed();

  Dataset out;
  out.features_ = std::move(m);
  out.class_values_ = class_values_;
  if (labels_) {
    std::vector<int> picked;
    picked.reserve(rows.size());
    for (std::size_t r : rows) picked.push_back((*labels_)[r]);
    out.labels_ = std::move(picked);
  }
  return out;
}

std::vector<std::pair<int, double>> Dataset::row(std::size_t i) const {
  std::vector<std::pair<int, double>> out;
  for (SparseRows::InnerIterator it(features_, static_cast<Eigen::Index>(i)); it; ++it) {
    out.emplace_back(static_cast<int>(it.col()), it.value());
  }
  return out;
}

bool operator==(const Dataset& a, const Dataset& b) {
  if (a.features_.rows() != b.features_.rows() || a.features_.cols() != b.features_.cols() ||
      a.features_.nonZeros() != b.features_.nonZeros()) {
    return false;
  }
  if (a.labels_ != b.labels_ || a.class_values_ != b.class_values_) return false;
  for (std::size_t i = 0; i < a.n_examples(); ++i) {
    if (a.row(i) != b.row(i)) return false;
  }
  return true;
}

std::vector<std::size_t> class_counts(std::span<const int> labels, int n_classes) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n_classes), 0);
  for (int y : labels) {
    if (y < 0 || y >= n_classes) throw DimensionError("class id out of range");
    ++counts[static_cast<std::size_t>(y)];
  }
  return counts;
}

}  // namespace rwa
