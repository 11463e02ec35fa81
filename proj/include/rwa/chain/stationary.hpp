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

#include "rwa/error.hpp"

#include <Eigen/Core>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace rwa {

namespace detail {

template <typename Derived>
std::vector<bool> reachable(const Eigen::MatrixBase<Derived>& p, Eigen::Index from, bool reverse) {
  const Eigen::Index n = p.rows();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Eigen::Index> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const Eigen::Index i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto w = reverse ? p(j, i) : p(i, j);
      if (w > 0 && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

inline std::string list_states(const std::vector<bool>& seen) {
  std::string out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(i);
  }
  return "{" + out + "}";
}

}  // namespace detail

/// Throws ContractError naming the offending states unless the positive
/// entries of `p` form a strongly connected digraph.
template <typename Derived>
void require_irreducible(const Eigen::MatrixBase<Derived>& p) {
  if (p.rows() == 0) throw ContractError("empty transition matrix");
  const auto forward = detail::reachable(p, 0, false);
  const auto backward = detail::reachable(p, 0, true);
  if (std::find(forward.begin(), forward.end(), false) != forward.end()) {
    throw ContractError("reducible chain: states " + detail::list_states(forward) + " are unreachable from state 0");
  }
  if (std::find(backward.begin(), backward.end(), false) != backward.end()) {
    throw ContractError("reducible chain: state 0 is unreachable from states " + detail::list_states(backward));
  }
}

/// Throws ContractError unless `p` is square with entries in [0, 1] and rows
/// summing to 1 within `tolerance`.
template <typename Derived>
void require_row_stochastic(const Eigen::MatrixBase<Derived>& p, double tolerance = 1e-9) {
  using std::abs;
  if (p.rows() != p.cols()) throw ContractError("transition matrix must be square");
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (!(p(i, j) >= 0 && p(i, j) <= 1)) {
        throw ContractError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [0, 1]");
      }
    }
    if (abs(static_cast<double>(p.row(i).sum()) - 1.0) > tolerance) {
      throw ContractError("row " + std::to_string(i) + " does not sum to 1");
    }
  }
}

/// The unique pi with pi P = pi and sum(pi) = 1 of an irreducible chain,
/// from a least-squares solve of [P^T - I; 1^T] pi = [0; 1]. A direct solve
/// rather than power iteration, so periodic chains are fine.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> stationary_distribution(
    const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  require_row_stochastic(p);
  require_irreducible(p);

  const Eigen::Index n = p.rows();
  Matrix system(n + 1, n);
  system.topRows(n) = p.transpose() - Matrix::Identity(n, n);
  system.row(n).setOnes();
  Vector rhs = Vector::Zero(n + 1);
  rhs(n) = Scalar(1);

  Vector pi = system.colPivHouseholderQr().solve(rhs);
  pi = pi.cwiseMax(Scalar(0));
  return pi / pi.sum();
}

}  // namespace rwa
