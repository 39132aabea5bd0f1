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

// Free-fermion simulation of nearest-neighbor matchgate circuits.
//
// Majorana operators follow the Jordan-Wigner convention
//   c_{2k}   = Z_0 ... Z_{k-1} X_k
//   c_{2k+1} = Z_0 ... Z_{k-1} Y_k
// and the covariance matrix is M_pq = -(i/2) <[c_p, c_q]>, so that
// M_{2k,2k+1} = <Z_k>. A gate U acts by M <- R M R^T where
// U^dag c_p U = sum_q R_pq c_q.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "matchlift/circuit.hpp"

namespace matchlift {

class CovarianceState {
 public:
  CovarianceState() = default;
  CovarianceState(std::size_t num_qubits, Eigen::MatrixXd m);

  std::size_t num_qubits() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::MatrixXd& matrix() { return m_; }

  double expectation_z(std::size_t k) const;
  /// max |M + Mᵀ|.
  double antisymmetry_defect() const;
  /// max |M·Mᵀ − I|; zero for pure states.
  double purity_defect() const;

 private:
  std::size_t n_ = 0;
  Eigen::MatrixXd m_;
};

/// Orthogonal map on Majorana modes, identity outside the square block that
/// starts at Majorana index `offset`.
struct MajoranaRotation {
  std::size_t num_qubits = 0;
  std::size_t offset = 0;
  Eigen::MatrixXd block;

  static MajoranaRotation identity(std::size_t num_qubits);
  Eigen::MatrixXd dense() const;
};

/// r2·r1 (apply r1 first), as a dense rotation.
MajoranaRotation compose(const MajoranaRotation& r2, const MajoranaRotation& r1);

/// Rotation of a matchgate acting on (site, site+1). The gate's principal
/// logarithm is projected onto the quadratic generators
/// {X⊗X, Y⊗Y, X⊗Y, Y⊗X, Z⊗1, 1⊗Z}; a Z⊗Z coefficient that is not a multiple
/// of π/2 means the gate is not a matchgate.
///
/// Throws NotMatchgate (including for gates that are not parity
/// preserving), NonUnitaryInput, BadTargets.
MajoranaRotation matchgate_to_rotation(const Mat4& g, std::size_t site, std::size_t num_qubits,
                                       const ToleranceConfig& tol = {});

/// Rotation of a diagonal single-qubit gate. Throws NotMatchgate if `g` has
/// off-diagonal entries above tol_classify.
MajoranaRotation phase_gate_to_rotation(const Mat2& g, std::size_t qubit, std::size_t num_qubits,
                                        const ToleranceConfig& tol = {});

/// Rotation of one circuit operation; reversed nearest-neighbor targets are
/// reordered. Throws BackendRefusal naming `op_index`.
MajoranaRotation operation_to_rotation(const Operation& op, std::size_t op_index,
                                       std::size_t num_qubits, const ToleranceConfig& tol = {});

/// Covariance matrix of a computational basis state (qubit 0 = MSB of
/// `basis`).
CovarianceState init_covariance(std::size_t num_qubits, std::uint64_t basis = 0);
CovarianceState init_covariance(const std::string& bits);

/// M ← R·M·Rᵀ. Throws DimensionMismatch.
CovarianceState evolve(CovarianceState s, const MajoranaRotation& r);
void evolve_in_place(CovarianceState& s, const MajoranaRotation& r);

struct MeasurementResult {
  int outcome = 0;
  double probability = 1;
  CovarianceState state;
};

/// Z measurement of qubit k. p(0) = (1 + M_{2k,2k+1})/2; outcomes with
/// probability below 1e-12 are never returned.
MeasurementResult measure_z(const CovarianceState& s, std::size_t k, std::mt19937_64& rng);
MeasurementResult measure_z(const CovarianceState& s, std::size_t k, std::uint64_t seed);

/// Post-measurement state for a chosen outcome. Throws std::domain_error if
/// the outcome has probability below 1e-12.
CovarianceState condition_on(const CovarianceState& s, std::size_t k, int outcome);

/// Sequential measurement of qubits 0, 1, ..., n−1. Returns the bit string
/// (first character = qubit 0).
std::string measure_all(CovarianceState s, std::mt19937_64& rng);

/// Evolves |initial> through a nearest-neighbor matchgate circuit.
CovarianceState run_fermionic(const Circuit& c, std::uint64_t initial = 0,
                              const ToleranceConfig& tol = {});

/// Bit-string histogram of `shots` full-register measurements.
std::map<std::string, std::int64_t> sample_fermionic(const CovarianceState& s, std::int64_t shots,
                                                     std::uint64_t seed);

}  // namespace matchlift
