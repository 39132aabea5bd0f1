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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "matchlift/types.hpp"

namespace matchlift {

/// Angles of the seven-parameter parity-preserving family (see
/// pp_from_angles). After extraction theta, phi lie in [0, π/2], alpha, gamma,
/// mu, nu in (−π, π] and beta in (−π/4, π/4].
struct PPParams {
  double theta = 0, alpha = 0, gamma = 0, phi = 0, mu = 0, nu = 0, beta = 0;
};

/// Interaction strengths of exp(i(a X⊗X + b Y⊗Y + c Z⊗Z)).
struct NonlocalTriple {
  double a = 0, b = 0, c = 0;

  /// Sorted descending. Permutations are local symmetries, so this is only a
  /// presentation choice.
  NonlocalTriple display_order() const;
};

struct Classification {
  bool is_unitary = false;
  bool is_pp = false;
  bool is_matchgate = false;
  /// Present when is_pp.
  std::optional<std::pair<Mat2, Mat2>> blocks;
  /// det(A)/det(B); present when is_pp. Invariant under global phase.
  std::optional<Complex> det_ratio;
};

/// Result of extracting PPParams from a gate. The input equals
/// e^{i global_phase} · pp_from_angles(params).
struct PPDecomposition {
  PPParams params;
  double global_phase = 0;
  /// The even (odd) block is anti-diagonal, so alpha (gamma) is unconstrained
  /// and pinned to 0.
  bool even_antidiagonal = false;
  bool odd_antidiagonal = false;
  /// The even (odd) block is diagonal, so mu (nu) is unconstrained and pinned
  /// to 0.
  bool even_diagonal = false;
  bool odd_diagonal = false;
};

/// U = e^{i global_phase} (u1⊗u2) · NL(core) · (v1⊗v2).
struct KAKResult {
  Mat2 u1, u2, v1, v2;
  NonlocalTriple core;
  double global_phase = 0;

  Mat4 reconstruct() const;
};

/// Local invariants computed in the magic basis: G1 complex, G2 real.
struct MakhlinInvariants {
  Complex g1;
  double g2 = 0;
};

struct MonteCarloEstimate {
  double value = 0;
  double std_error = 0;
};

Classification classify(const Mat4& u, const ToleranceConfig& tol = {});

/// Throws NotParityPreserving, NonUnitaryInput.
PPDecomposition decompose_pp(const Mat4& u, const ToleranceConfig& tol = {});
PPParams pp_params(const Mat4& u, const ToleranceConfig& tol = {});
Mat4 reconstruct_pp(const PPParams& p);

/// a = (θ+φ)/2, b = (φ−θ)/2, c = β.
NonlocalTriple nonlocal_from_pp(const PPParams& p);

Mat4 nonlocal_gate(const NonlocalTriple& t);

/// Columns are the magic basis; conjugation by it maps SU(2)⊗SU(2) onto
/// SO(4) and diagonalizes every nonlocal_gate.
const Mat4& magic_basis();

/// Splits a local two-qubit operator into its tensor factors. Throws
/// DecompositionFailure if `k` is not a product within `tol`.
std::pair<Mat2, Mat2> kron_factor(const Mat4& k, double tol = 1e-9);

/// Cartan decomposition. The core is reduced coordinate-wise into [0, π/2)
/// by absorbing exp(i(π/2) P⊗P) = i P⊗P into the right local factor.
KAKResult kak(const Mat4& u, const ToleranceConfig& tol = {});

/// 1 − cos²2a cos²2b cos²2c − sin²2a sin²2b sin²2c.
double entangling_power_closed(const NonlocalTriple& t);

/// Mean linear entropy of the reduced state of U(|ψ1>⊗|ψ2>) over Haar-random
/// product inputs, scaled by 9/2.
///
/// Shard s of `shards` draws ⌊samples/shards⌋ (+1 for the first
/// samples mod shards shards) samples from a generator seeded with
/// shard_seed(seed, s); partial sums are combined in shard order, so the
/// result is bitwise reproducible for fixed (seed, shards).
MonteCarloEstimate entangling_power_mc(const Mat4& u, std::int64_t samples, std::uint64_t seed,
                                       int shards = 1, const ToleranceConfig& tol = {});

/// SplitMix64 finalizer over seed + (s+1)·golden-ratio increment.
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

MakhlinInvariants makhlin_invariants(const Mat4& u, const ToleranceConfig& tol = {});

bool same_local_class(const MakhlinInvariants& x, const MakhlinInvariants& y, double tol);

}  // namespace matchlift
