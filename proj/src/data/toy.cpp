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

#include "rwa/data/toy.hpp"

#include "rwa/error.hpp"

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <random>

namespace rwa {
namespace {

// Draws n_per_class points per class, class 0 first, then applies the
// rotation. Labels are class ids 0/1 with raw values -1/+1.
Dataset draw_domain(const RotatedToyParams& p, double angle, std::mt19937_64& rng) {
  const int n = 2 * p.n_per_class;
  std::normal_distribution<double> z(0.0, 1.0);
  const double c = std::cos(angle);
  const double s = std::sin(angle);

  Eigen::MatrixXd points(n, 2);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int y = i < p.n_per_class ? 0 : 1;
    const double x0 = (y == 0 ? -p.class_offset : p.class_offset) + p.noise_scales[0] * z(rng);
    const double x1 = p.noise_scales[1] * z(rng);
    points(i, 0) = c * x0 - s * x1;
    points(i, 1) = s * x0 + c * x1;
    labels[static_cast<std::size_t>(i)] = y;
  }
  return Dataset::from_dense(points).with_labels(std::move(labels), {-1.0, 1.0});
}

}  // namespace

RotatedToyParams RotatedToyParams::small_rotation() { return RotatedToyParams{}; }

RotatedToyParams RotatedToyParams::trace_setup() {
  RotatedToyParams p;
  p.n_per_class = 100;
  p.rotation_degrees = 72.0;
  p.class_offset = 3.0;
  p.noise_scales = {0.5, 1.0};
  return p;
}

ToyPair generate_rotated_toy(const RotatedToyParams& params) {
  if (params.n_per_class < 1) throw ContractError("n_per_class must be at least 1");
  if (params.noise_scales[0] < 0.0 || params.noise_scales[1] < 0.0) {
    throw ContractError("noise scales must be non-negative");
  }
  std::mt19937_64 rng(params.seed);
  ToyPair out;
  out.source = draw_domain(params, 0.0, rng);
  out.target = draw_domain(params, params.rotation_degrees * std::numbers::pi / 180.0, rng);
  return out;
}

ToyPair generate_line_toy() {
  ToyPair out;
  out.source = Dataset::from_rows({{{0, -8.0}}, {{0, 8.0}}}, 1).with_labels({0, 1}, {-1.0, 1.0});
  out.target = Dataset::from_rows({{{0, -9.0}}, {{0, -1.0}}, {{0, 1.0}}, {{0, 9.0}}}, 1);
  return out;
}

}  // namespace rwa
