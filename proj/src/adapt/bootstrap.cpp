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

#include "rwa/adapt/bootstrap.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rwa {
namespace {

std::vector<double> class_id_values(int n_classes) {
  std::vector<double> v(static_cast<std::size_t>(n_classes));
  std::iota(v.begin(), v.end(), 0.0);
  return v;
}

// The `quota` examples with the highest score for class c, ties by index.
std::vector<std::size_t> top_scoring(const Eigen::Ref<const Eigen::MatrixXd>& scores, int c, std::size_t quota) {
  std::vector<std::size_t> order(static_cast<std::size_t>(scores.rows()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t keep = std::min(quota, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      const double sa = scores(static_cast<Eigen::Index>(a), c);
                      const double sb = scores(static_cast<Eigen::Index>(b), c);
                      return sa > sb || (sa == sb && a < b);
                    });
  order.resize(keep);
  return order;
}

}  // namespace

std::string_view to_string(EmptyClassPolicy policy) {
  switch (policy) {
    case EmptyClassPolicy::abort: return "abort";
    case EmptyClassPolicy::top_scores: return "top_scores";
  }
  return "unknown";
}

EmptyClassPolicy parse_empty_class_policy(std::string_view name) {
  if (name == "abort") return EmptyClassPolicy::abort;
  if (name == "top_scores") return EmptyClassPolicy::top_scores;
  throw InputError("unknown empty-class policy '" + std::string(name) + "'");
}

BootstrapSample balanced_bootstrap(const Dataset& target, const Labeling& y, std::size_t quota,
                                   const Eigen::Ref<const Eigen::MatrixXd>& scores, EmptyClassPolicy policy,
                                   std::mt19937_64& rng) {
  if (quota < 1) throw ContractError("bootstrap quota must be at least 1");
  if (y.size() != target.n_examples()) throw DimensionError("labeling length does not match target size");
  const int n_classes = y.n_classes();

  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(n_classes));
  for (std::size_t i = 0; i < y.size(); ++i) members[static_cast<std::size_t>(y[i])].push_back(i);
  if (std::all_of(members.begin(), members.end(), [](const auto& m) { return m.empty(); })) {
    throw ContractError("cannot bootstrap an empty labeling");
  }

  BootstrapSample out;
  out.indices.reserve(quota * static_cast<std::size_t>(n_classes));
  std::vector<int> sample_labels;
  sample_labels.reserve(out.indices.capacity());
  for (int c = 0; c < n_classes; ++c) {
    auto pool = members[static_cast<std::size_t>(c)];
    if (pool.empty()) {
      if (policy == EmptyClassPolicy::abort) {
        throw ContractError("class " + std::to_string(c) + " has no examples in the current labeling");
      }
      if (scores.rows() != static_cast<Eigen::Index>(target.n_examples()) || scores.cols() != n_classes) {
        throw DimensionError("score matrix shape does not match target and class count");
      }
      pool = top_scoring(scores, c, quota);
      out.filled_classes.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t k = 0; k < quota; ++k) {
      out.indices.push_back(pool[pick(rng)]);
      sample_labels.push_back(c);
    }
  }
  out.data = target.select(out.indices).with_labels(std::move(sample_labels), class_id_values(n_classes));
  return out;
}

BootstrapSample uniform_subsample(const Dataset& target, const Labeling& y, std::size_t size, std::mt19937_64& rng) {
  if (size < 1) throw ContractError("subsample size must be at least 1");
  if (y.size() != target.n_examples() || y.size() == 0) throw DimensionError("labeling length does not match target size");
  BootstrapSample out;
  std::uniform_int_distribution<std::size_t> pick(0, y.size() - 1);
  std::vector<int> sample_labels;
  for (std::size_t k = 0; k < size; ++k) {
    out.indices.push_back(pick(rng));
    sample_labels.push_back(y[out.indices.back()]);
  }
  out.data = target.select(out.indices).with_labels(std::move(sample_labels), class_id_values(y.n_classes()));
  return out;
}

}  // namespace rwa
