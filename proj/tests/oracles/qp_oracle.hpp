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


// Exhaustive reference solver for tiny soft-margin SVMs, independent of the
// coordinate-descent trainer. The bias is folded in as an extra constant
// feature, so the problem is
//   min_w 1/2 |w|^2 + C sum_i max(0, 1 - y_i w.z_i),   z_i = (x_i, bias_feature).
// The objective is piecewise quadratic. Each example is either strictly
// violating (A), exactly on the margin (E) or strictly outside (I). For a
// fixed assignment the optimum over the affine set {y_i w.z_i = 1, i in E}
// has a closed form; the true optimum is one of these candidates, so the
// minimum true objective over all 3^n assignments is the global minimum.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

namespace rwa::oracle {

struct QpSolution {
  Eigen::VectorXd w;  // last entry multiplies bias_feature
  double objective = std::numeric_limits<double>::infinity();
};

inline double svm_objective(const Eigen::MatrixXd& z, const Eigen::VectorXd& y, double C, const Eigen::VectorXd& w) {
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) loss += std::max(0.0, 1.0 - y(i) * z.row(i).dot(w));
  return 0.5 * w.squaredNorm() + C * loss;
}

/// x: n x d features, y: +-1 labels.
inline QpSolution brute_force_svm(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double C, double bias_feature) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols() + 1;
  Eigen::MatrixXd z(n, d);
  z << x, Eigen::VectorXd::Constant(n, bias_feature);
  Eigen::MatrixXd yz = y.asDiagonal() * z;

  QpSolution best;
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 = I, 1 = A, 2 = E
  for (;;) {
    Eigen::VectorXd w0 = Eigen::VectorXd::Zero(d);
    std::vector<Eigen::Index> on_margin;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (state[static_cast<std::size_t>(i)] == 1) w0 += C * yz.row(i).transpose();
      if (state[static_cast<std::size_t>(i)] == 2) on_margin.push_back(i);
    }
    Eigen::VectorXd w = w0;
    if (!on_margin.empty()) {
      const auto k = static_cast<Eigen::Index>(on_margin.size());
      Eigen::MatrixXd ze(k, d);
      for (Eigen::Index r = 0; r < k; ++r) ze.row(r) = yz.row(on_margin[static_cast<std::size_t>(r)]);
      // w = w0 + ze^T lambda with ze w = 1.
      const Eigen::MatrixXd gram = ze * ze.transpose();
      const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(k) - ze * w0;
      const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
      w = w0 + ze.transpose() * lambda;
    }
    const double obj = svm_objective(z, y, C, w);
    if (obj < best.objective) best = {w, obj};

    Eigen::Index pos = 0;
    while (pos < n && ++state[static_cast<std::size_t>(pos)] == 3) state[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return best;
}

}  // namespace rwa::oracle
