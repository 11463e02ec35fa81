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


// Values frozen from the oracles in this directory (see test_oracles.cpp,
// which recomputes each one and fails if they drift).

#pragma once

namespace rwa::frozen {

// (1 - (3/4)^4)^2 = 30625 / 65536
inline constexpr double kContainment_4_4_2 = 0.4673004150390625;
// (1 - e^{-1})^3
inline constexpr double kContainmentApprox_100_100_3 = 0.25258045782764716792;
// (10 ln(10 e) + ln(1000)) / 90
inline constexpr double kGeneralization_100_10_01 = 0.44370673565469548769;
// sample std of {1, 3}
inline constexpr double kStdOneThree = 1.4142135623730950488;

}  // namespace rwa::frozen
