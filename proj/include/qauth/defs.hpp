// Copyright 2026 The qauth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace qauth {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance hierarchy: state/operator construction asserts the tight bound,
// channel-level and acceptance checks use the looser one.
inline constexpr double kConstructTol = 1e-10;
inline constexpr double kChannelTol = 1e-9;

// Hard cap on the total qubit count of any dense state. Everything above
// this is rejected explicitly instead of silently grinding.
inline constexpr std::size_t kQubitCap = 14;

// i^k for k mod 4.
inline Complex phase_factor(unsigned k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3u];
}

}  // namespace qauth
