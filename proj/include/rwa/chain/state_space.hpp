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
#include "rwa/linsvm/hypothesis.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rwa {

/// An ordered set of distinct labelings, the states of the walk's chain.
class LabelingStateSpace {
 public:
  LabelingStateSpace() = default;
  /// Throws ContractError on duplicates or labelings of differing shape.
  explicit LabelingStateSpace(std::vector<Labeling> states);

  std::size_t size() const { return states_.size(); }
  const Labeling& state(std::size_t i) const { return states_[i]; }
  const std::vector<Labeling>& states() const { return states_; }
  std::optional<std::size_t> find(const Labeling& y) const;

 private:
  std::vector<Labeling> states_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Which end of the axis class 1 sits on.
enum class Orientation { increasing, decreasing };

/// Orientation of a binary hypothesis over one feature: increasing when the
/// class-1 score grows with x. Throws ContractError for a flat hypothesis.
Orientation orientation_of(const LinearHypothesis& h_s);

/// Threshold labelings of 1-D binary data. With a fixed orientation there
/// are n + 1 of them (class-0 prefix of every length along the oriented
/// axis); without one both orientations are merged. `balanced_only` keeps
/// only labelings with at least one example per class. States are ordered
/// by the number of class-0 examples, largest first.
/// Throws ContractError unless the data has one feature and distinct values.
LabelingStateSpace enumerate_1d_labelings(const Dataset& target, std::optional<Orientation> orientation,
                                          bool balanced_only);

}  // namespace rwa
