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

#include <array>
#include <cstdint>
#include <utility>

namespace rwa {

/// Two Gaussian classes in the plane. Class 0 is centred at (-class_offset, 0)
/// and class 1 at (+class_offset, 0); noise is axis-aligned with the given
/// per-axis standard deviations. The target sample comes from the same
/// process rotated counter-clockwise by `rotation_degrees`, so the axis that
/// separates the target classes is only partly visible to a source model.
/// Raw class values are -1 and +1.
struct RotatedToyParams {
  int n_per_class = 200;
  double rotation_degrees = 45.0;
  double class_offset = 1.0;
  std::array<double, 2> noise_scales{0.4, 0.9};
  std::uint64_t seed = 0;

  /// Unit-offset data at 45 degrees, the shape of the introductory picture.
  static RotatedToyParams small_rotation();
  /// Means at (+-3, 0), noise (0.5, 1.0), 100 per class, 72 degrees: the
  /// setup used for the per-iteration accuracy/margin trace.
  static RotatedToyParams trace_setup();
};

struct ToyPair {
  Dataset source;  // labeled
  Dataset target;  // labeled with ground truth; strip before adapting
};

ToyPair generate_rotated_toy(const RotatedToyParams& params);

/// The 1-D chain example: source {-8 -> class 0, +8 -> class 1}, target
/// {-9, -1, 1, 9} unlabeled.
ToyPair generate_line_toy();

}  // namespace rwa
