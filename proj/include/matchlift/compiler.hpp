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

// Compilation of logical circuits onto nearest-neighbor matchgates plus one
// parity-preserving non-matchgate, using the dual-rail pair encoding
//   |0>_L = |00>,  |1>_L = |11>
// with logical qubit i stored on physical qubits (2i, 2i+1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchlift/circuit.hpp"
#include "matchlift/gate_analysis.hpp"

namespace matchlift {

struct Encoding {
  std::size_t logical_count = 0;

  std::size_t physical_count() const { return 2 * logical_count; }
  static std::pair<std::size_t, std::size_t> pair(std::size_t logical) {
    return {2 * logical, 2 * logical + 1};
  }
  /// Physical basis index of a logical basis index (each bit doubled).
  std::uint64_t encode_basis(std::uint64_t logical_index) const;
};

/// Physical bit string to logical bits. Both qubits of every pair are read;
/// std::nullopt when some pair disagrees, i.e. the state left the code space.
std::optional<std::string> decode_readout(const std::string& physical_bits);

/// input = e^{i global_phase} · G(zp(τ1), zp(τ2)) · NL(core) · G(zp(τ3), zp(τ4))
/// with zp(t) = diag(e^{it}, e^{−it}).
struct StripResult {
  NonlocalTriple core;
  double tau1 = 0, tau2 = 0;  // left
  double tau3 = 0, tau4 = 0;  // right
  double global_phase = 0;

  Mat4 left() const;
  Mat4 right() const;
  Mat4 reconstruct() const;
};

/// Throws NotParityPreserving, NonUnitaryInput.
StripResult strip_z_rotations(const Mat4& g, const ToleranceConfig& tol = {});

/// G(A, A) on the pair of `logical`. Acts as A on the encoded qubit.
Operation logical_single_qubit(const Mat2& a, std::size_t logical, const std::string& name = "G");

struct EntanglerBlock {
  /// Physical ops on (2i+1, 2i+2) in time order; the nonlocal core is tagged
  /// as the target gate.
  std::vector<Operation> ops;
  /// Diagonal of the induced gate on logical (i, i+1), index 2·x_i + x_{i+1}.
  Eigen::Vector4cd diagonal;

  Mat4 logical_gate() const { return diagonal.asDiagonal(); }
};

/// G(H,H), NL(core), G(X,X), G(H,H) bridging logical `i` and `i+1`.
EntanglerBlock build_entangler_block(const NonlocalTriple& core, std::size_t i = 0);

/// Induced logical diagonal of build_entangler_block:
/// (e^{i(a−b+c)}, e^{i(a+b−c)}, −e^{−i(a+b+c)}, −e^{i(−a+b+c)}).
Eigen::Vector4cd entangler_diagonal(const NonlocalTriple& core);

/// Z⊗Z strength of a diagonal two-qubit gate: (p00 − p01 − p10 + p11)/4,
/// reduced into (−π/4, π/4].
double zz_strength(const Eigen::Vector4cd& diagonal);

inline constexpr std::int64_t kDefaultRMax = 100000;

/// Recipe for a logical CZ on (i, j = i+1) from entangler blocks D:
///   pre_i, D^{blocks_before}, mid_i, D^{blocks_after}, post_i, post_j
/// (time order, single-qubit corrections are logical). The product equals
/// e^{i global_phase} · CZ up to residual_error.
struct EntanglerPlan {
  enum class Mode { kRepeat, kInterleaved };

  double c_eff = 0;
  std::int64_t repetitions = 0;
  double residual_error = 0;
  Mode mode = Mode::kRepeat;
  std::int64_t blocks_before = 0;
  std::int64_t blocks_after = 0;
  Mat2 pre_i = Mat2::Identity();
  Mat2 mid_i = Mat2::Identity();
  Mat2 post_i = Mat2::Identity();
  Mat2 post_j = Mat2::Identity();
  double global_phase = 0;

  /// 4×4 logical action of the recipe for blocks with this diagonal.
  Mat4 logical_effect(const Eigen::Vector4cd& diagonal) const;
};

/// Throws TargetIsMatchgate when |e^{4ic} − 1| ≤ tol_classify (the same
/// determinant test classify applies), SynthesisLimit when more than r_max
/// blocks would be needed, std::invalid_argument for epsilon ≤ 0.
///
/// Tries r = 1, 2, ... blocks in a row first; accepts r when r·c mod π/2 is
/// within epsilon of π/4. Otherwise interleaves a single-qubit X rotation
/// between two runs of m blocks, which is exact.
EntanglerPlan plan_entangler(const NonlocalTriple& core, double epsilon,
                             std::int64_t r_max = kDefaultRMax, const ToleranceConfig& tol = {});

struct ProvenanceEntry {
  std::size_t logical_op = 0;
  std::size_t begin = 0;  // physical op range [begin, end)
  std::size_t end = 0;
  /// Adjacent logical SWAPs inserted to bring a distant pair together.
  std::size_t routing_swaps = 0;
};

struct CompiledCircuit {
  Encoding encoding;
  Circuit physical;
  std::vector<ProvenanceEntry> provenance;
  StripResult strip;
  EntanglerPlan plan;
  /// Global phases of the entangler recipes, accumulated over the circuit.
  double global_phase = 0;
  double epsilon = 0;
};

struct CompileOptions {
  std::int64_t r_max = kDefaultRMax;
  ToleranceConfig tol;
};

/// Accepted logical ops: any single-qubit unitary, and two-qubit ops equal up
/// to global phase to CZ, CNOT (control = first target) or SWAP.
///
/// Throws TargetNotPP, TargetIsMatchgate, UnsupportedLogicalGate,
/// SynthesisLimit, NonUnitaryInput.
CompiledCircuit compile(const Circuit& logical, const Mat4& target, double epsilon,
                        const CompileOptions& opts = {});

struct FidelityReport {
  double fidelity = 0;
  double leakage = 0;
  /// Phase φ with physical ≈ e^{iφ}·logical on the code space (exact mode).
  double phase = 0;
  bool exact = true;
  std::size_t samples = 0;
  /// Entangling power of the realized logical gate, for two logical qubits.
  std::optional<double> logical_entangling_power;
  bool non_entangling = false;
  std::vector<ProvenanceEntry> provenance;

  bool passes(double epsilon) const { return fidelity >= 1 - epsilon && leakage <= epsilon; }
};

inline constexpr std::size_t kExactVerifyCap = 12;

struct VerifyOptions {
  /// Random encoded inputs instead of the full restriction.
  bool sampled = false;
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  ToleranceConfig tol;
};

/// Restricts the physical circuit to the code space and compares it with the
/// logical unitary up to global phase. Exact mode throws TooLarge above
/// kExactVerifyCap physical qubits unless sampled mode is chosen.
FidelityReport verify(const Circuit& physical, const Circuit& logical,
                      const VerifyOptions& opts = {});
FidelityReport verify(const CompiledCircuit& compiled, const Circuit& logical,
                      const VerifyOptions& opts = {});

}  // namespace matchlift
