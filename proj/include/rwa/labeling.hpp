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

#include <cstddef>
#include <vector>

namespace rwa {

/// A class assignment for every target example.
class Labeling {
 public:
  Labeling() = default;
  /// Throws DimensionError if an assignment falls outside [0, n_classes).
  Labeling(std::vector<int> assignments, int n_classes);

  std::size_t size() const { return assignments_.size(); }
  int n_classes() const { return n_classes_; }
  int operator[](std::size_t i) const { return assignments_[i]; }
  const std::vector<int>& assignments() const { return assignments_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> assignments_;
  int n_classes_ = 0;
};

}  // namespace rwa
