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

#include "rwa/adapt/rwa.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace rwa {

Labeling init_labels(const LinearHypothesis& h_s, const Dataset& target) { return predict(h_s, target); }

Labeling majority_vote(std::span<const Labeling> labelings) {
  if (labelings.empty()) throw ContractError("majority vote over an empty sequence");
  const std::size_t n = labelings.front().size();
  const int n_classes = labelings.front().n_classes();
  for (const auto& y : labelings) {
    if (y.size() != n || y.n_classes() != n_classes) throw DimensionError("labelings differ in shape");
  }
  std::vector<int> out(n);
  std::vector<std::size_t> votes(static_cast<std::size_t>(n_classes));
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(votes.begin(), votes.end(), 0);
    for (const auto& y : labelings) ++votes[static_cast<std::size_t>(y[i])];
    // max_element returns the first maximum, i.e. the lowest class id.
    out[i] = static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
  }
  return Labeling(std::move(out), n_classes);
}

double agreement(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size()) throw DimensionError("labelings differ in length");
  if (a.size() == 0) return 1.0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i] == b[i];
  return static_cast<double>(same) / static_cast<double>(a.size());
}

double accuracy(const Labeling& y, std::span<const int> truth) {
  if (y.size() != truth.size()) throw DimensionError("ground truth length does not match labeling");
  if (y.size() == 0) return 1.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < y.size(); ++i) correct += y[i] == truth[i];
  return static_cast<double>(correct) / static_cast<double>(y.size());
}

double select_target_c(const Dataset& target, const Labeling& y0, const RwaConfig& cfg) {
  if (cfg.c_target) {
    if (!(*cfg.c_target > 0.0)) throw ContractError("target C must be positive");
    return *cfg.c_target;
  }
  const auto counts = class_counts(y0.assignments(), y0.n_classes());
  const auto smallest = *std::min_element(counts.begin(), counts.end());
  CvOptions cv = cfg.c_selection;
  cv.folds = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cv.folds), smallest));
  if (cv.folds < 2) {
    throw ContractError("the source labeling leaves a class with " + std::to_string(smallest) +
                        " target examples; cross-validating C needs 2, pass an explicit target C");
  }
  cv.seed = cfg.seed;
  cv.solver = cfg.solver;
  return cross_validate_c(target, y0.assignments(), y0.n_classes(), cv).best_c;
}

RwaResult run_rwa(const LinearHypothesis& h_s, const Dataset& target, const RwaConfig& cfg,
                  std::optional<std::span<const int>> truth) {
  if (cfg.iterations < 1) throw ContractError("iteration count must be at least 1");
  if (target.n_examples() == 0) throw ContractError("target set is empty");
  const int n_classes = h_s.n_classes();

  RwaResult result;
  result.initial = init_labels(h_s, target);
  result.quota = cfg.per_class_quota.value_or(target.n_examples() / static_cast<std::size_t>(n_classes));
  if (result.quota < 1) throw ContractError("per-class quota must be at least 1");
  if (truth) result.initial_accuracy = accuracy(result.initial, *truth);

  result.c_target = select_target_c(target, result.initial, cfg);
  SvmOptions solver = cfg.solver;
  solver.C = result.c_target;

  std::mt19937_64 rng(cfg.seed);
  Labeling previous = result.initial;
  Eigen::MatrixXd previous_scores = decision_scores(h_s, target);
  result.trace.iterations.reserve(static_cast<std::size_t>(cfg.iterations));

  for (int k = 1; k <= cfg.iterations; ++k) {
    const auto start = std::chrono::steady_clock::now();
    IterationRecord record;
    LinearHypothesis combined;
    for (int attempt = 0;; ++attempt) {
      try {
        auto sample = balanced_bootstrap(target, previous, result.quota, previous_scores,
                                         cfg.empty_class_fallback, rng);
        SvmOptions step_solver = solver;
        step_solver.seed = rng();
        combined = combine(train_ova(sample.data, step_solver), h_s);
        record.filled_classes = std::move(sample.filled_classes);
        record.retries = attempt;
        break;
      } catch (const ContractError& e) {
        if (attempt >= 1) {
          throw ContractError("iteration " + std::to_string(k) + " failed after a retry: " + e.what());
        }
      }
    }

    previous_scores = decision_scores(combined, target);
    record.labels = argmax_labels(previous_scores);
    record.agreement_with_previous = agreement(record.labels, previous);
    if (truth) record.accuracy = accuracy(record.labels, *truth);
    if (cfg.trace_margin) {
      try {
        record.margin = ova_margin(train_ova_models(target, record.labels.assignments(), n_classes, solver));
      } catch (const ContractError&) {
        // single-class labeling or zero weights: no margin to report
      }
    }
    previous = record.labels;
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.trace.iterations.push_back(std::move(record));
  }

  std::vector<Labeling> voters;
  voters.reserve(result.trace.iterations.size() + 1);
  if (cfg.include_y0_in_vote) voters.push_back(result.initial);
  for (const auto& r : result.trace.iterations) voters.push_back(r.labels);
  result.final_labels = majority_vote(voters);
  if (truth) result.final_accuracy = accuracy(result.final_labels, *truth);
  return result;
}

}  // namespace rwa
