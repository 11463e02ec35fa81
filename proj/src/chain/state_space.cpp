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

#include "rwa/chain/state_space.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rwa {

LabelingStateSpace::LabelingStateSpace(std::vector<Labeling> states) : states_(std::move(states)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].size() != states_.front().size() || states_[i].n_classes() != states_.front().n_classes()) {
      throw ContractError("state " + std::to_string(i) + " differs in shape from state 0");
    }
    if (!index_.emplace(states_[i].assignments(), i).second) {
      throw ContractError("state " + std::to_string(i) + " duplicates an earlier state");
    }
  }
}

std::optional<std::size_t> LabelingStateSpace::find(const Labeling& y) const {
  if (y.n_classes() != (states_.empty() ? y.n_classes() : states_.front().n_classes())) return std::nullopt;
  const auto it = index_.find(y.assignments());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Orientation orientation_of(const LinearHypothesis& h_s) {
  if (h_s.n_classes() != 2 || h_s.n_features() != 1) {
    throw ContractError("orientation needs a binary hypothesis over one feature");
  }
  const double slope = h_s.weights()(1, 0) - h_s.weights()(0, 0);
  if (slope == 0.0) throw ContractError("hypothesis is flat along the feature axis");
  return slope > 0.0 ? Orientation::increasing : Orientation::decreasing;
}

LabelingStateSpace enumerate_1d_labelings(const Dataset& target, std::optional<Orientation> orientation,
                                          bool balanced_only) {
  if (target.n_features() != 1) throw ContractError("threshold enumeration needs exactly one feature");
  const std::size_t n = target.n_examples();
  const Eigen::VectorXd x = Eigen::MatrixXd(target.features()).col(0);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[static_cast<Eigen::Index>(a)] < x[static_cast<Eigen::Index>(b)];
  });
  for (std::size_t k = 1; k < n; ++k) {
    if (x[static_cast<Eigen::Index>(order[k])] == x[static_cast<Eigen::Index>(order[k - 1])]) {
      throw ContractError("duplicate coordinate " + std::to_string(x[static_cast<Eigen::Index>(order[k])]) +
                          "; threshold labelings are ill-defined");
    }
  }

  std::vector<Orientation> sides;
  if (orientation) {
    sides.push_back(*orientation);
  } else {
    sides = {Orientation::increasing, Orientation::decreasing};
  }

  std::vector<Labeling> states;
  std::vector<std::vector<int>> seen;
  const std::size_t lo = balanced_only ? 1 : 0;
  const std::size_t hi = balanced_only ? (n == 0 ? 0 : n - 1) : n;
  for (std::size_t zeros = hi + 1; zeros-- > lo;) {
    for (auto side : sides) {
      std::vector<int> y(n, 1);
      for (std::size_t k = 0; k < zeros; ++k) {
        const std::size_t rank = side == Orientation::increasing ? k : n - 1 - k;
        y[order[rank]] = 0;
      }
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
      seen.push_back(y);
      states.emplace_back(std::move(y), 2);
    }
  }
  return LabelingStateSpace(std::move(states));
}

}  // namespace rwa
