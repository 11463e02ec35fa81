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

#include <cmath>
#include <cstddef>

namespace rwa {

/// Lower bound on the probability that a with-replacement sample of size m
/// from n examples contains a fixed set of d of them:
///   (1 - (1 - 1/n)^m)^d,  or (1 - e^{-m/n})^d when `approximate`.
template <typename Scalar = double>
Scalar containment_bound(std::size_t n, std::size_t m, std::size_t d, bool approximate = false) {
  using std::exp;
  using std::expm1;
  using std::log1p;
  using std::pow;
  if (n < 1) throw ContractError("containment bound needs n >= 1");
  if (d == 0) return Scalar(1);
  if (m == 0) return Scalar(0);
  const Scalar sn = static_cast<Scalar>(n);
  const Scalar sm = static_cast<Scalar>(m);
  // 1 - (1 - 1/n)^m written to stay accurate for large n.
  const Scalar hit = approximate ? -expm1(-sm / sn) : -expm1(sm * log1p(Scalar(-1) / sn));
  return pow(hit, static_cast<Scalar>(d));
}

/// Error bound of the maximum-margin hyperplane with d support vectors out
/// of l examples, holding with probability 1 - delta:
///   (d ln(e l / d) + ln(l / delta)) / (l - d).
/// May exceed 1. Throws ContractError for l <= d, d < 1 or delta outside (0, 1).
template <typename Scalar = double>
Scalar generalization_bound(std::size_t l, std::size_t d, Scalar delta) {
  using std::log;
  if (d < 1) throw ContractError("generalization bound needs at least one support vector");
  if (l <= d) throw ContractError("generalization bound is vacuous for l <= d");
  if (!(delta > Scalar(0) && delta < Scalar(1))) throw ContractError("delta must lie in (0, 1)");
  const Scalar sl = static_cast<Scalar>(l);
  const Scalar sd = static_cast<Scalar>(d);
  return (sd * (Scalar(1) + log(sl / sd)) + log(sl / delta)) / (sl - sd);
}

}  // namespace rwa
