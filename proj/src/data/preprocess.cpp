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

#include "rwa/data/preprocess.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <string>

namespace rwa {
namespace {

bool needs_statistics(PreprocessKind kind) { return kind != PreprocessKind::rectify; }

Dataset relabel_like(SparseRows features, const Dataset& like) {
  if (like.has_labels()) return Dataset(std::move(features), like.labels(), like.class_values());
  return Dataset(std::move(features));
}

SparseRows divide_rows_by_mean(const SparseRows& x) {
  SparseRows out = x;
  for (Eigen::Index i = 0; i < out.outerSize(); ++i) {
    double sum = 0.0;
    Eigen::Index count = 0;
    for (SparseRows::InnerIterator it(out, i); it; ++it) {
      sum += it.value();
      ++count;
    }
    if (count == 0 || sum == 0.0) continue;
    const double mean = sum / static_cast<double>(count);
    for (SparseRows::InnerIterator it(out, i); it; ++it) it.valueRef() /= mean;
  }
  return out;
}

SparseRows standardize_dense(const SparseRows& x, const Eigen::VectorXd& mean, const Eigen::VectorXd& scale) {
  Eigen::MatrixXd dense = Eigen::MatrixXd(x);
  dense.rowwise() -= mean.transpose();
  dense.array().rowwise() /= scale.transpose().array();
  return dense.sparseView(0.0, 0.0);
}

PreprocessStep fit_step(PreprocessKind kind, const Dataset& data) {
  PreprocessStep step{kind, {}, {}};
  if (!needs_statistics(kind)) return step;
  if (data.n_examples() < 2) {
    throw ContractError(std::string(to_string(kind)) + " needs at least 2 examples to estimate a spread");
  }
  const Dataset basis = kind == PreprocessKind::instance_mean_then_standardize
                            ? relabel_like(divide_rows_by_mean(data.features()), data)
                            : data;
  auto moments = feature_moments(basis);
  step.mean = std::move(moments.mean);
  step.scale = moments.stddev.unaryExpr([](double s) { return s > 0.0 ? s : 1.0; });
  return step;
}

Dataset apply_step(const PreprocessStep& step, const Dataset& data) {
  switch (step.kind) {
    case PreprocessKind::rectify: {
      SparseRows x = data.features();
      for (Eigen::Index k = 0; k < x.nonZeros(); ++k) {
        x.valuePtr()[k] = std::max(0.0, x.valuePtr()[k]);
      }
      return relabel_like(std::move(x), data);
    }
    case PreprocessKind::scale_by_std: {
      SparseRows x = data.features();
      for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
        for (SparseRows::InnerIterator it(x, i); it; ++it) it.valueRef() /= step.scale[it.col()];
      }
      return relabel_like(std::move(x), data);
    }
    case PreprocessKind::standardize:
      return relabel_like(standardize_dense(data.features(), step.mean, step.scale), data);
    case PreprocessKind::instance_mean_then_standardize:
      return relabel_like(standardize_dense(divide_rows_by_mean(data.features()), step.mean, step.scale), data);
  }
  throw ContractError("unknown preprocessing step");
}

}  // namespace

std::string_view to_string(PreprocessKind kind) {
  switch (kind) {
    case PreprocessKind::standardize: return "standardize";
    case PreprocessKind::scale_by_std: return "scale_by_std";
    case PreprocessKind::instance_mean_then_standardize: return "instance_mean_then_standardize";
    case PreprocessKind::rectify: return "rectify";
  }
  return "unknown";
}

PreprocessKind parse_preprocess_kind(std::string_view name) {
  for (auto kind : {PreprocessKind::standardize, PreprocessKind::scale_by_std,
                    PreprocessKind::instance_mean_then_standardize, PreprocessKind::rectify}) {
    if (to_string(kind) == name) return kind;
  }
  throw InputError("unknown preprocessing step '" + std::string(name) + "'");
}

std::vector<PreprocessKind> parse_preprocess_chain(std::string_view spec) {
  std::vector<PreprocessKind> out;
  std::size_t start = 0;
  while (start < spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    if (end > start) out.push_back(parse_preprocess_kind(spec.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

FeatureMoments feature_moments(const Dataset& data) {
  const auto& x = data.features();
  const auto n = static_cast<double>(data.n_examples());
  const Eigen::Index d = x.cols();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd stored = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
    for (SparseRows::InnerIterator it(x, i); it; ++it) {
      sum[it.col()] += it.value();
      stored[it.col()] += 1.0;
    }
  }
  FeatureMoments m;
  m.mean = n > 0 ? Eigen::VectorXd(sum / n) : Eigen::VectorXd::Zero(d);

  // Second pass on centred values; implicit zeros contribute mean^2 each.
  Eigen::VectorXd ss = (n - stored.array()).matrix().cwiseProduct(m.mean.cwiseProduct(m.mean));
  for (Eigen::Index i = 0; i < x.outerSize(); ++i) {
    for (SparseRows::InnerIterator it(x, i); it; ++it) {
      const double c = it.value() - m.mean[it.col()];
      ss[it.col()] += c * c;
    }
  }
  m.stddev = n > 1 ? Eigen::VectorXd((ss / (n - 1.0)).cwiseSqrt()) : Eigen::VectorXd::Zero(d);
  return m;
}

PreprocessRecipe PreprocessRecipe::fit(const std::vector<PreprocessKind>& kinds, const Dataset& data) {
  PreprocessRecipe recipe;
  recipe.n_features_ = data.n_features();
  Dataset current = data;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    recipe.steps_.push_back(fit_step(kinds[k], current));
    if (k + 1 < kinds.size()) current = apply_step(recipe.steps_.back(), current);
  }
  return recipe;
}

Dataset PreprocessRecipe::apply(const Dataset& data) const {
  if (data.n_features() != n_features_) {
    throw DimensionError("recipe fitted on " + std::to_string(n_features_) + " features, got " +
                         std::to_string(data.n_features()));
  }
  Dataset current = data;
  for (const auto& step : steps_) current = apply_step(step, current);
  return current;
}

bool PreprocessRecipe::preserves_sparsity() const {
  return std::none_of(steps_.begin(), steps_.end(), [](const PreprocessStep& s) {
    return s.kind == PreprocessKind::standardize || s.kind == PreprocessKind::instance_mean_then_standardize;
  });
}

}  // namespace rwa
