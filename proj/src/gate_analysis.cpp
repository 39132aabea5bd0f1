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

#include "matchlift/gate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "matchlift/errors.hpp"
#include "matchlift/gate_algebra.hpp"

namespace matchlift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kHalfPi = kPi / 2;

// Coordinates within this distance of π/2 are folded to 0 by kak.
constexpr double kFoldSnap = 1e-11;

void require_unitary(const Mat4& u, const ToleranceConfig& tol, const char* who) {
  if (!is_unitary(u, tol.tol_unitary)) {
    throw NonUnitaryInput(std::string(who) + ": input is not unitary");
  }
}

// Real orthogonal V with Vᵀ·M·V diagonal, for complex symmetric unitary M.
// Re(M) and Im(M) commute, so a generic real combination of them shares their
// eigenvectors; retry with other combinations if a coincidental degeneracy
// of the combination hides that.
Eigen::Matrix4d simultaneous_real_diagonalizer(const Mat4& m) {
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  double best_err = 1e300;
  Eigen::Matrix4d best;
  for (int attempt = 0; attempt < 32; ++attempt) {
    double r = std::tan(0.37 + 0.6180339887498949 * attempt);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re + r * im);
    Eigen::Matrix4d v = es.eigenvectors();
    Mat4 d = v.transpose().cast<Complex>() * m * v.cast<Complex>();
    double err = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) err = std::max(err, std::abs(d(i, j)));
      }
    }
    if (err < best_err) {
      best_err = err;
      best = v;
    }
    if (err < 1e-12) break;
  }
  return best;
}

Mat2 pauli(int k) {
  switch (k) {
    case 0: return gates::pauli_x();
    case 1: return gates::pauli_y();
    default: return gates::pauli_z();
  }
}

}  // namespace

NonlocalTriple NonlocalTriple::display_order() const {
  std::array<double, 3> v{a, b, c};
  std::sort(v.begin(), v.end(), std::greater<>());
  return {v[0], v[1], v[2]};
}

Classification classify(const Mat4& u, const ToleranceConfig& tol) {
  require_unitary(u, tol, "classify");
  Classification out;
  out.is_unitary = true;
  if (off_block_mass(u) > tol.tol_classify) return out;
  out.is_pp = true;
  auto blocks = pp_blocks(u);
  Complex det_a = blocks.first.determinant();
  Complex det_b = blocks.second.determinant();
  out.det_ratio = det_a / det_b;
  out.is_matchgate = std::abs(det_a - det_b) <= tol.tol_classify;
  out.blocks = std::move(blocks);
  return out;
}

PPDecomposition decompose_pp(const Mat4& u, const ToleranceConfig& tol) {
  require_unitary(u, tol, "pp_params");
  if (off_block_mass(u) > tol.tol_classify) {
    throw NotParityPreserving("pp_params: gate mixes parity sectors");
  }
  auto [a, b] = pp_blocks(u);
  const Complex det_a = a.determinant();
  const Complex det_b = b.determinant();

  PPDecomposition out;
  PPParams& p = out.params;
  // det A / det B = e^{4iβ}; std::arg lands in (−π, π], so β in (−π/4, π/4].
  double ratio_arg = std::arg(det_a / det_b);
  // A ratio of −1 can carry a −0 imaginary part; keep it on the +π side.
  if (ratio_arg < -kPi + 1e-12) ratio_arg = kPi;
  p.beta = ratio_arg / 4;
  out.global_phase = std::arg(det_a) / 2 - p.beta;

  // Strip the global phase and β to leave two SU(2) blocks.
  const Mat2 even = std::polar(1.0, -out.global_phase - p.beta) * a;
  const Mat2 odd = std::polar(1.0, -out.global_phase + p.beta) * b;

  p.theta = std::atan2(std::abs(even(0, 1)), std::abs(even(0, 0)));
  p.phi = std::atan2(std::abs(odd(0, 1)), std::abs(odd(0, 0)));

  out.even_antidiagonal = std::abs(even(0, 0)) <= tol.tol_classify;
  out.odd_antidiagonal = std::abs(odd(0, 0)) <= tol.tol_classify;
  out.even_diagonal = std::abs(even(0, 1)) <= tol.tol_classify;
  out.odd_diagonal = std::abs(odd(0, 1)) <= tol.tol_classify;

  p.alpha = out.even_antidiagonal ? 0.0 : std::arg(even(0, 0));
  p.mu = out.even_diagonal ? 0.0 : std::arg(even(0, 1) / kI);
  p.gamma = out.odd_antidiagonal ? 0.0 : std::arg(odd(0, 0));
  p.nu = out.odd_diagonal ? 0.0 : std::arg(odd(0, 1) / kI);
  return out;
}

PPParams pp_params(const Mat4& u, const ToleranceConfig& tol) { return decompose_pp(u, tol).params; }

Mat4 reconstruct_pp(const PPParams& p) {
  return pp_from_angles(p.theta, p.alpha, p.gamma, p.phi, p.mu, p.nu, p.beta);
}

NonlocalTriple nonlocal_from_pp(const PPParams& p) {
  return {(p.theta + p.phi) / 2, (p.phi - p.theta) / 2, p.beta};
}

Mat4 nonlocal_gate(const NonlocalTriple& t) { return nonlocal_gate(t.a, t.b, t.c); }

const Mat4& magic_basis() {
  static const Mat4 q = [] {
    Mat4 m;
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return Mat4(m / std::sqrt(2.0));
  }();
  return q;
}

std::pair<Mat2, Mat2> kron_factor(const Mat4& k, double tol) {
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double n = k.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  }
  if (best <= 0) throw DecompositionFailure("kron_factor: zero operator");
  // Scale the dominant block to Frobenius norm √2, the norm of a unitary.
  Mat2 right = k.block<2, 2>(2 * bi, 2 * bj) * (std::sqrt(2.0) / best);
  Mat2 left;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      left(i, j) = (right.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
    }
  }
  if ((kron(left, right) - k).cwiseAbs().maxCoeff() > tol) {
    throw DecompositionFailure("kron_factor: operator is not a tensor product");
  }
  return {left, right};
}

Mat4 KAKResult::reconstruct() const {
  return std::polar(1.0, global_phase) * kron(u1, u2) * nonlocal_gate(core) * kron(v1, v2);
}

KAKResult kak(const Mat4& u, const ToleranceConfig& tol) {
  require_unitary(u, tol, "kak");
  const Mat4& q = magic_basis();

  KAKResult out;
  out.global_phase = std::arg(u.determinant()) / 4;
  const Mat4 special = std::polar(1.0, -out.global_phase) * u;
  const Mat4 ub = q.adjoint() * special * q;
  const Mat4 m = ub.transpose() * ub;

  Eigen::Matrix4d o2 = simultaneous_real_diagonalizer(m).transpose();
  if (o2.determinant() < 0) o2.row(0) *= -1.0;
  const Mat4 lambda = o2.cast<Complex>() * m * o2.transpose().cast<Complex>();

  std::array<double, 4> half{};
  for (int k = 0; k < 4; ++k) half[k] = std::arg(lambda(k, k)) / 2;
  // det(D) must be +1 so that the left orthogonal factor lands in SO(4).
  if (std::cos(half[0] + half[1] + half[2] + half[3]) < 0) half[0] += kPi;

  Eigen::Vector4cd d_inv;
  for (int k = 0; k < 4; ++k) d_inv(k) = std::polar(1.0, -half[k]);
  const Mat4 o1c = ub * o2.transpose().cast<Complex>() * d_inv.asDiagonal();
  if (o1c.imag().cwiseAbs().maxCoeff() > 1e-6) {
    throw DecompositionFailure("kak: left factor is not real orthogonal");
  }
  const Eigen::Matrix4d o1 = o1c.real();

  // Magic-basis eigenphases of NL(a,b,c) are (a−b+c, a+b−c, −a−b−c, −a+b+c).
  std::array<double, 3> abc{(half[0] + half[1]) / 2, (half[1] + half[3]) / 2,
                            (half[0] + half[3]) / 2};

  std::tie(out.u1, out.u2) = kron_factor(q * o1.cast<Complex>() * q.adjoint(), 1e-8);
  std::tie(out.v1, out.v2) = kron_factor(q * o2.cast<Complex>() * q.adjoint(), 1e-8);

  for (int axis = 0; axis < 3; ++axis) {
    double x = abc[axis];
    int turns = static_cast<int>(std::floor(x / kHalfPi));
    x -= turns * kHalfPi;
    if (x > kHalfPi - kFoldSnap) {
      x -= kHalfPi;
      ++turns;
    }
    x = std::max(x, 0.0);
    abc[axis] = x;
    int k = ((turns % 4) + 4) % 4;
    if (k == 0) continue;
    // NL(x + kπ/2) = NL(x)·i^k (P⊗P)^k.
    Mat2 pk = Mat2::Identity();
    for (int r = 0; r < k; ++r) pk = pauli(axis) * pk;
    out.v1 = pk * out.v1;
    out.v2 = pk * out.v2;
    out.global_phase += k * kHalfPi;
  }
  out.core = {abc[0], abc[1], abc[2]};
  out.global_phase = std::remainder(out.global_phase, 2 * kPi);

  double residual = (out.reconstruct() - u).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-9)) {
    throw DecompositionFailure("kak: reconstruction residual " + std::to_string(residual));
  }
  return out;
}

double entangling_power_closed(const NonlocalTriple& t) {
  double ca = std::cos(2 * t.a), cb = std::cos(2 * t.b), cc = std::cos(2 * t.c);
  double sa = std::sin(2 * t.a), sb = std::sin(2 * t.b), sc = std::sin(2 * t.c);
  return 1.0 - ca * ca * cb * cb * cc * cc - sa * sa * sb * sb * sc * sc;
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
  std::uint64_t z = seed + (shard + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct ShardSums {
  double sum = 0;
  double sum_sq = 0;
};

Eigen::Vector2cd haar_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector2cd v;
  v(0) = Complex(gauss(rng), gauss(rng));
  v(1) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

ShardSums run_shard(const Mat4& u, std::int64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ShardSums s;
  for (std::int64_t i = 0; i < count; ++i) {
    Eigen::Vector2cd p1 = haar_qubit(rng);
    Eigen::Vector2cd p2 = haar_qubit(rng);
    Eigen::Vector4cd in;
    in << p1(0) * p2(0), p1(0) * p2(1), p1(1) * p2(0), p1(1) * p2(1);
    Eigen::Vector4cd out = u * in;
    Mat2 psi;
    psi << out(0), out(1), out(2), out(3);
    double purity = (psi * psi.adjoint()).squaredNorm();
    double e = 1.0 - purity;
    s.sum += e;
    s.sum_sq += e * e;
  }
  return s;
}

}  // namespace

MonteCarloEstimate entangling_power_mc(const Mat4& u, std::int64_t samples, std::uint64_t seed,
                                       int shards, const ToleranceConfig& tol) {
  if (samples < 1) throw BadSampleCount("entangling_power_mc: samples must be >= 1");
  if (shards < 1) throw BadSampleCount("entangling_power_mc: shards must be >= 1");
  require_unitary(u, tol, "entangling_power_mc");

  std::vector<ShardSums> partial(static_cast<std::size_t>(shards));
  auto count_for = [&](int s) {
    return samples / shards + (s < samples % shards ? 1 : 0);
  };
  if (shards == 1) {
    partial[0] = run_shard(u, samples, shard_seed(seed, 0));
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(partial.size());
    for (int s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] { partial[s] = run_shard(u, count_for(s), shard_seed(seed, s)); });
    }
  }
  ShardSums total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = total.sum / n;
  const double var = samples > 1 ? std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1)) : 0.0;
  // Linear entropy of the reduced state peaks at 2/9 on average.
  constexpr double kScale = 4.5;
  return {kScale * mean, kScale * std::sqrt(var / n)};
}

MakhlinInvariants makhlin_invariants(const Mat4& u, const ToleranceConfig& tol) {
  require_unitary(u, tol, "makhlin_invariants");
  const Mat4& q = magic_basis();
  const Mat4 ub = q.adjoint() * u * q;
  const Mat4 m = ub.transpose() * ub;
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  return {tr * tr / (16.0 * det), ((tr * tr - tr2) / (4.0 * det)).real()};
}

bool same_local_class(const MakhlinInvariants& x, const MakhlinInvariants& y, double tol) {
  return std::abs(x.g1 - y.g1) <= tol && std::abs(x.g2 - y.g2) <= tol;
}

}  // namespace matchlift
