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

#include "rwa/adapt/bootstrap.hpp"
#include "rwa/data/dataset.hpp"
#include "rwa/labeling.hpp"
#include "rwa/linsvm/cross_validation.hpp"
#include "rwa/linsvm/hypothesis.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rwa {

struct RwaConfig {
  int iterations = 500;
  /// Examples drawn per class; defaults to floor(|T| / n_classes).
  std::optional<std::size_t> per_class_quota;
  /// C for every target-side SVM. When unset it is chosen once by
  /// cross-validation on T labeled by the source hypothesis.
  std::optional<double> c_target;
  std::uint64_t seed = 0;
  bool include_y0_in_vote = false;
  EmptyClassPolicy empty_class_fallback = EmptyClassPolicy::abort;
  /// Solver settings for target-side training (C is replaced by c_target).
  SvmOptions solver;
  /// Grid and folds for the automatic C choice; folds shrink to the smallest
  /// class size of Y0 when that is smaller.
  CvOptions c_selection;
  /// Refit an SVM on (T, Y^k) after every step to trace its margin. The
  /// refit never feeds back into the walk.
  bool trace_margin = true;
};

struct IterationRecord {
  Labeling labels;
  std::optional<double> margin;
  double agreement_with_previous = 0.0;
  std::optional<double> accuracy;
  double seconds = 0.0;
  int retries = 0;
  std::vector<int> filled_classes;
};

struct RwaTrace {
  std::vector<IterationRecord> iterations;
};

struct RwaResult {
  Labeling initial;
  Labeling final_labels;
  RwaTrace trace;
  double c_target = 0.0;
  std::size_t quota = 0;
  std::optional<double> initial_accuracy;
  std::optional<double> final_accuracy;
};

Labeling init_labels(const LinearHypothesis& h_s, const Dataset& target);

/// Per example, the most frequent class; ties go to the lowest class id.
/// Throws ContractError for an empty sequence, DimensionError for mismatched
/// lengths or class counts.
Labeling majority_vote(std::span<const Labeling> labelings);

/// Fraction of positions where the two labelings agree.
double agreement(const Labeling& a, const Labeling& b);

/// Fraction of positions where `y` matches the ground truth class ids.
double accuracy(const Labeling& y, std::span<const int> truth);

/// The C the walk would use: cfg.c_target, or the cross-validated choice on
/// (T, Y0).
double select_target_c(const Dataset& target, const Labeling& y0, const RwaConfig& cfg);

/// The random walk: starting from Y0 = predict(h_s, T), each step trains a
/// one-versus-all SVM on a class-balanced bootstrap of (T, Y^{k-1}), adds h_s
/// and relabels T. The result is the majority vote over Y^1..Y^K (plus Y0 if
/// configured). Source data is never touched. `truth` (class ids) only
/// feeds the accuracy diagnostics.
RwaResult run_rwa(const LinearHypothesis& h_s, const Dataset& target, const RwaConfig& cfg,
                  std::optional<std::span<const int>> truth = std::nullopt);

}  // namespace rwa
