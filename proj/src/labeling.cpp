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

#include "rwa/labeling.hpp"

#include "rwa/error.hpp"

#include <string>
#include <utility>

namespace rwa {

Labeling::Labeling(std::vector<int> assignments, int n_classes)
    : assignments_(std::move(assignments)), n_classes_(n_classes) {
  for (int y : assignments_) {
    if (y < 0 || y >= n_classes_) {
      throw DimensionError("class " + std::to_string(y) + " outside [0, " + std::to_string(n_classes_) + ")");
    }
  }
}

}  // namespace rwa
