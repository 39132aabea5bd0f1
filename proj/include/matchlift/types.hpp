// Copyright 2026 The matchlift Authors
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
#include <numbers>

#include <Eigen/Dense>

namespace matchlift {

using Complex = std::complex<double>;

/// Single-qubit operator.
using Mat2 = Eigen::Matrix2cd;

/// Two-qubit operator in the basis |q0 q1>, q0 the most significant bit:
/// index 0 = |00>, 1 = |01>, 2 = |10>, 3 = |11>.
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;

/// Numerical thresholds. Every classification decision in the library reads
/// its threshold from here.
struct ToleranceConfig {
  double tol_unitary = 1e-9;
  double tol_classify = 1e-9;
  double tol_phase = 1e-9;

  /// Throws std::invalid_argument unless every field is in (0, 1e-2).
  void validate() const;
};

}  // namespace matchlift
