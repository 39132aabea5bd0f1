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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "matchlift/circuit.hpp"

namespace matchlift {

inline constexpr std::size_t kStateVectorCap = 20;
inline constexpr std::size_t kUnitaryCap = 12;

/// Dense n-qubit state. Amplitude index bit (n−1−k) holds qubit k, so qubit 0
/// is the most significant bit, matching the two-qubit matrix convention.
class StateVector {
 public:
  /// |basis>; throws TooLarge above `cap` qubits.
  explicit StateVector(std::size_t num_qubits, std::uint64_t basis = 0,
                       std::size_t cap = kStateVectorCap);

  std::size_t num_qubits() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amps_.norm(); }

  /// Throws BadTargets, NonUnitaryInput.
  void apply(const Mat2& gate, std::size_t q, const ToleranceConfig& tol = {});
  /// `gate` row/column index is 2·bit(q0) + bit(q1); q0 > q1 is allowed.
  void apply(const Mat4& gate, std::size_t q0, std::size_t q1, const ToleranceConfig& tol = {});
  void apply(const Operation& op, const ToleranceConfig& tol = {});

  /// <Z_k>.
  double expectation_z(std::size_t k) const;

  std::size_t bit_position(std::size_t qubit) const { return n_ - 1 - qubit; }

 private:
  std::size_t n_;
  Eigen::VectorXcd amps_;
};

/// Basis index of a bit string, first character = qubit 0.
std::uint64_t basis_index(const std::string& bits);
std::string basis_label(std::uint64_t index, std::size_t num_qubits);

StateVector apply(StateVector state, const Operation& op, const ToleranceConfig& tol = {});

/// Applies the circuit left to right to |initial>.
StateVector run(const Circuit& c, std::uint64_t initial = 0, const ToleranceConfig& tol = {});

/// Full 2^n × 2^n unitary; throws TooLarge above kUnitaryCap qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& c, const ToleranceConfig& tol = {});

/// Computational-basis samples drawn from |amplitude|². Keys are basis
/// indices. Deterministic for a fixed seed.
std::map<std::uint64_t, std::int64_t> sample(const StateVector& state, std::int64_t shots,
                                             std::uint64_t seed);

}  // namespace matchlift
