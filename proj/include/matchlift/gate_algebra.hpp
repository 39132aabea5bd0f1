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

#include <span>
#include <string_view>
#include <utility>
#include <variant>

#include "matchlift/types.hpp"

namespace matchlift {

/// Either a single-qubit or a two-qubit gate matrix.
using GateMatrix = std::variant<Mat2, Mat4>;

/// Largest entry modulus of M·M† − I.
double unitarity_defect(const Mat2& m);
double unitarity_defect(const Mat4& m);
bool is_unitary(const Mat2& m, double tol);
bool is_unitary(const Mat4& m, double tol);

/// Largest modulus among the eight entries that a parity-preserving gate must
/// have equal to zero.
double off_block_mass(const Mat4& m);

/// Parity-preserving gate G(A, B): A acts on the even block {|00>, |11>},
/// B on the odd block {|01>, |10>}.
///
/// Throws NonUnitaryInput unless both blocks are unitary within tol_unitary.
Mat4 build_pp(const Mat2& even, const Mat2& odd, const ToleranceConfig& tol = {});

/// Same layout as build_pp without the unitarity check. Used internally for
/// blocks that are unitary by construction.
Mat4 assemble_pp(const Mat2& even, const Mat2& odd);

/// (A, B) blocks of a gate with the parity-preserving layout. Off-block
/// entries are ignored.
std::pair<Mat2, Mat2> pp_blocks(const Mat4& g);

/// G1·G2 for parity-preserving G1, G2. Throws NotParityPreserving when either
/// factor has off-block mass above tol_classify.
Mat4 pp_product(const Mat4& g1, const Mat4& g2, const ToleranceConfig& tol = {});

/// Kronecker product; `a` acts on qubit 0 (the most significant bit).
Mat4 kron(const Mat2& a, const Mat2& b);

/// True iff some real phase p has max|e^{ip}·m − n| <= tol. The phase is
/// anchored on the largest-modulus entry of n.
bool equal_up_to_global_phase(const Mat4& m, const Mat4& n, double tol);
bool equal_up_to_global_phase(const Mat2& m, const Mat2& n, double tol);

/// The phase p minimizing the anchored comparison above, i.e. n ≈ e^{ip}·m.
double relative_phase(const Mat4& m, const Mat4& n);

/// exp(i(a X⊗X + b Y⊗Y + c Z⊗Z)), evaluated entry by entry from its closed
/// form: even block e^{ic}·exp(i(a−b)σx), odd block e^{−ic}·exp(i(a+b)σx).
Mat4 nonlocal_gate(double a, double b, double c);

/// The seven-angle parity-preserving family:
///   A = e^{iβ} [[cosθ e^{iα}, i sinθ e^{iμ}], [i sinθ e^{−iμ}, cosθ e^{−iα}]]
///   B = e^{−iβ}[[cosφ e^{iγ}, i sinφ e^{iν}], [i sinφ e^{−iν}, cosφ e^{−iγ}]]
Mat4 pp_from_angles(double theta, double alpha, double gamma, double phi, double mu,
                    double nu, double beta);

/// diag(e^{it}, e^{−it}). The Z-rotation convention used by the Z-phase
/// stripping of parity-preserving gates.
Mat2 z_phase(double t);

namespace gates {

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 phase_s();
Mat2 phase_t();
/// exp(−iθσ/2).
Mat2 rx(double theta);
Mat2 ry(double theta);
Mat2 rz(double theta);

Mat4 identity4();
Mat4 swap();
/// G(I, iX).
Mat4 iswap();
/// Fermionic SWAP, G(Z, X).
Mat4 fswap();
Mat4 cz();
/// Control on qubit 0, target qubit 1.
Mat4 cnot();
/// G(I, e^{iτ}X): SWAP at τ = 0, iSWAP at τ = π/2.
Mat4 tau_swap(double tau);

}  // namespace gates

/// Looks up a named gate. Recognized names (case-insensitive):
///   I X Y Z H S T RX(θ) RY(θ) RZ(θ)
///   SWAP ISWAP FSWAP CZ CNOT NL(a,b,c) TSWAP(τ) PP(θ,α,γ,φ,μ,ν,β)
/// Throws UnknownGate or BadArity.
GateMatrix gate_library(std::string_view name, std::span<const double> params = {});

/// Number of parameters a library gate takes, or -1 if the name is unknown.
int gate_arity(std::string_view name);

/// Number of qubits a library gate acts on, or 0 if the name is unknown.
int gate_qubits(std::string_view name);

}  // namespace matchlift
