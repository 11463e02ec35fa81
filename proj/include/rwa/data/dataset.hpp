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

#include <Eigen/SparseCore>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rwa {

using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

/// A sparse example matrix with optional integer class labels.
///
/// Rows are kept in canonical form: column indices strictly increasing and
/// no explicitly stored zeros. Labels, when present, are contiguous class ids
/// in [0, n_classes); `class_values()` maps an id back to the raw label it
/// came from (sorted ascending, so id 0 is the smallest raw label).
class Dataset {
 public:
  Dataset() = default;

  /// Unlabeled dataset. The matrix is pruned and compressed.
  explicit Dataset(SparseRows features);

  /// Labeled dataset. Throws DimensionError if the label vector has the wrong
  /// length or refers to a class outside [0, class_values.size()).
  Dataset(SparseRows features, std::vector<int> labels, std::vector<double> class_values);

  /// Builds from (index, value) rows. Indices must be strictly increasing.
  static Dataset from_rows(const std::vector<std::vector<std::pair<int, double>>>& rows,
                           int n_features);

  /// Builds from a dense row-major block, dropping zeros.
  static Dataset from_dense(const Eigen::MatrixXd& dense);

  std::size_t n_examples() const { return static_cast<std::size_t>(features_.rows()); }
  int n_features() const { return static_cast<int>(features_.cols()); }
  int n_classes() const { return static_cast<int>(class_values_.size()); }
  bool has_labels() const { return labels_.has_value(); }

  const SparseRows& features() const { return features_; }
  const std::vector<int>& labels() const;
  const std::vector<double>& class_values() const { return class_values_; }

  /// Same examples with labels attached (raw class values as given).
  Dataset with_labels(std::vector<int> labels, std::vector<double> class_values) const;
  Dataset without_labels() const;

  /// Widens the feature space; trailing columns are implicit zeros.
  /// Throws DimensionError when asked to shrink below the current width.
  Dataset with_n_features(int n_features) const;

  /// Rows selected by index, in the given order (repeats allowed).
  Dataset select(std::span<const std::size_t> rows) const;

  /// Row i as (index, value) pairs.
  std::vector<std::pair<int, double>> row(std::size_t i) const;

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  SparseRows features_;
  std::optional<std::vector<int>> labels_;
  std::vector<double> class_values_;
};

/// Per-class example counts; `n_classes` sets the vector length.
std::vector<std::size_t> class_counts(std::span<const int> labels, int n_classes);

}  // namespace rwa
