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

#include "matchlift/fermion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "matchlift/errors.hpp"
#include "matchlift/gate_algebra.hpp"

namespace matchlift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kImpossible = 1e-12;

struct LocalOperators {
  std::array<Mat4, 4> majorana;
  std::array<Mat4, 6> quadratic;
  Mat4 zz;
};

const LocalOperators& local_operators() {
  static const LocalOperators ops = [] {
    const Mat2 i2 = gates::identity2(), x = gates::pauli_x(), y = gates::pauli_y(),
               z = gates::pauli_z();
    LocalOperators o;
    o.majorana = {kron(x, i2), kron(y, i2), kron(z, x), kron(z, y)};
    o.quadratic = {kron(x, x), kron(y, y), kron(x, y), kron(y, x), kron(z, i2), kron(i2, z)};
    o.zz = kron(z, z);
    return o;
  }();
  return ops;
}

// −i·log(u) for a unitary 2×2 block via its (diagonal) Schur form.
Mat2 hermitian_log(const Mat2& u) {
  Eigen::ComplexSchur<Mat2> schur(u);
  const Mat2& t = schur.matrixT();
  const Mat2& v = schur.matrixU();
  Eigen::Vector2cd phases(std::arg(t(0, 0)), std::arg(t(1, 1)));
  return v * phases.asDiagonal() * v.adjoint();
}

// Taken block by block so the logarithm stays parity preserving even when the
// two sectors share an eigenvalue.
Mat4 hermitian_log_pp(const Mat4& g) {
  auto [even, odd] = pp_blocks(g);
  return assemble_pp(hermitian_log(even), hermitian_log(odd));
}

}  // namespace

CovarianceState::CovarianceState(std::size_t num_qubits, Eigen::MatrixXd m)
    : n_(num_qubits), m_(std::move(m)) {
  const auto dim = static_cast<Eigen::Index>(2 * n_);
  if (m_.rows() != dim || m_.cols() != dim) {
    throw DimensionMismatch("covariance matrix must be 2n x 2n");
  }
}

double CovarianceState::expectation_z(std::size_t k) const {
  if (k >= n_) throw BadTargets("qubit out of range");
  const auto a = static_cast<Eigen::Index>(2 * k);
  return m_(a, a + 1);
}

double CovarianceState::antisymmetry_defect() const {
  return n_ == 0 ? 0.0 : (m_ + m_.transpose()).cwiseAbs().maxCoeff();
}

double CovarianceState::purity_defect() const {
  if (n_ == 0) return 0.0;
  return (m_ * m_.transpose() - Eigen::MatrixXd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

MajoranaRotation MajoranaRotation::identity(std::size_t num_qubits) {
  return {num_qubits, 0, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(2 * num_qubits),
                                                   static_cast<Eigen::Index>(2 * num_qubits))};
}

Eigen::MatrixXd MajoranaRotation::dense() const {
  const auto dim = static_cast<Eigen::Index>(2 * num_qubits);
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(dim, dim);
  r.block(static_cast<Eigen::Index>(offset), static_cast<Eigen::Index>(offset), block.rows(),
          block.cols()) = block;
  return r;
}

MajoranaRotation compose(const MajoranaRotation& r2, const MajoranaRotation& r1) {
  if (r1.num_qubits != r2.num_qubits) throw DimensionMismatch("compose: qubit count mismatch");
  return {r1.num_qubits, 0, r2.dense() * r1.dense()};
}

MajoranaRotation matchgate_to_rotation(const Mat4& g, std::size_t site, std::size_t num_qubits,
                                       const ToleranceConfig& tol) {
  if (site + 1 >= num_qubits) throw BadTargets("matchgate site out of range");
  if (!is_unitary(g, tol.tol_unitary)) throw NonUnitaryInput("matchgate_to_rotation: not unitary");
  if (off_block_mass(g) > tol.tol_classify) {
    throw NotMatchgate("gate is not parity preserving");
  }
  const LocalOperators& ops = local_operators();
  const Mat4 h = hermitian_log_pp(g);

  // exp(i h) = e^{i h0} e^{i hzz Z⊗Z} exp(i h_quad); Z⊗Z is central among the
  // parity-preserving generators, and e^{i hzz Z⊗Z} is a matchgate exactly
  // when hzz is a multiple of π/2.
  const double hzz = (ops.zz * h).trace().real() / 4;
  const double turns = std::round(hzz / (kPi / 2));
  if (std::abs(hzz - turns * kPi / 2) > tol.tol_classify) {
    throw NotMatchgate("Z⊗Z generator coefficient " + std::to_string(hzz) +
                       " is not a multiple of pi/2 (det A != det B)");
  }
  Mat4 h_quad = Mat4::Zero();
  for (const Mat4& p : ops.quadratic) h_quad += ((p * h).trace().real() / 4) * p;

  // U† c_p U = Σ_q exp(K)_pq c_q with K_pq = ¼ tr(c_q · (−i)[H, c_p]).
  Eigen::Matrix4d k;
  for (int p = 0; p < 4; ++p) {
    const Mat4 comm = -kI * (h_quad * ops.majorana[p] - ops.majorana[p] * h_quad);
    for (int q = 0; q < 4; ++q) k(p, q) = (ops.majorana[q] * comm).trace().real() / 4;
  }
  Eigen::Matrix4d r = k.exp();
  // Conjugation by (Z⊗Z)^m negates all four local modes for odd m.
  if (static_cast<long long>(turns) % 2 != 0) r = -r;
  return {num_qubits, 2 * site, r};
}

MajoranaRotation phase_gate_to_rotation(const Mat2& g, std::size_t qubit, std::size_t num_qubits,
                                        const ToleranceConfig& tol) {
  if (qubit >= num_qubits) throw BadTargets("qubit out of range");
  if (!is_unitary(g, tol.tol_unitary)) throw NonUnitaryInput("phase_gate_to_rotation: not unitary");
  if (std::abs(g(0, 1)) > tol.tol_classify || std::abs(g(1, 0)) > tol.tol_classify) {
    throw NotMatchgate("single-qubit gate is not diagonal");
  }
  const double delta = std::arg(g(1, 1) / g(0, 0));
  Eigen::Matrix2d r;
  r << std::cos(delta), -std::sin(delta), std::sin(delta), std::cos(delta);
  return {num_qubits, 2 * qubit, r};
}

MajoranaRotation operation_to_rotation(const Operation& op, std::size_t op_index,
                                       std::size_t num_qubits, const ToleranceConfig& tol) {
  try {
    if (const auto* m2 = std::get_if<Mat2>(&op.matrix)) {
      return phase_gate_to_rotation(*m2, op.targets.at(0), num_qubits, tol);
    }
    if (!op.is_nearest_neighbor()) {
      throw BackendRefusal(op_index, "'" + op.name + "' is not nearest-neighbor");
    }
    Mat4 g = std::get<Mat4>(op.matrix);
    std::size_t site = op.targets[0];
    if (op.targets[0] > op.targets[1]) {
      g = gates::swap() * g * gates::swap();
      site = op.targets[1];
    }
    return matchgate_to_rotation(g, site, num_qubits, tol);
  } catch (const NotMatchgate& e) {
    throw BackendRefusal(op_index, "'" + op.name + "' is not a matchgate: " + e.what());
  } catch (const NonUnitaryInput& e) {
    throw BackendRefusal(op_index, "'" + op.name + "': " + e.what());
  }
}

CovarianceState init_covariance(std::size_t num_qubits, std::uint64_t basis) {
  const auto dim = static_cast<Eigen::Index>(2 * num_qubits);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t k = 0; k < num_qubits; ++k) {
    const std::size_t shift = num_qubits - 1 - k;
    const bool one = shift < 64 && ((basis >> shift) & 1U);
    const double s = one ? -1.0 : 1.0;
    const auto a = static_cast<Eigen::Index>(2 * k);
    m(a, a + 1) = s;
    m(a + 1, a) = -s;
  }
  return {num_qubits, std::move(m)};
}

CovarianceState init_covariance(const std::string& bits) {
  CovarianceState s = init_covariance(bits.size(), 0);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') throw ParseError("basis label must contain only 0/1");
    if (bits[k] == '1') {
      const auto a = static_cast<Eigen::Index>(2 * k);
      s.matrix()(a, a + 1) = -1;
      s.matrix()(a + 1, a) = 1;
    }
  }
  return s;
}

void evolve_in_place(CovarianceState& s, const MajoranaRotation& r) {
  if (r.num_qubits != s.num_qubits() ||
      r.offset + static_cast<std::size_t>(r.block.rows()) > 2 * s.num_qubits()) {
    throw DimensionMismatch("evolve: rotation does not match state size");
  }
  Eigen::MatrixXd& m = s.matrix();
  const auto o = static_cast<Eigen::Index>(r.offset);
  const Eigen::Index w = r.block.rows();
  Eigen::MatrixXd rows = r.block * m.middleRows(o, w);
  m.middleRows(o, w) = rows;
  Eigen::MatrixXd cols = m.middleCols(o, w) * r.block.transpose();
  m.middleCols(o, w) = cols;
}

CovarianceState evolve(CovarianceState s, const MajoranaRotation& r) {
  evolve_in_place(s, r);
  return s;
}

CovarianceState condition_on(const CovarianceState& s, std::size_t k, int outcome) {
  if (k >= s.num_qubits()) throw BadTargets("qubit out of range");
  const Eigen::MatrixXd& m = s.matrix();
  const auto a = static_cast<Eigen::Index>(2 * k);
  const Eigen::Index b = a + 1;
  const double sigma = outcome == 0 ? 1.0 : -1.0;
  const double denom = 1.0 + sigma * m(a, b);
  if (denom / 2 < kImpossible) throw std::domain_error("condition_on: outcome has zero probability");

  Eigen::MatrixXd out = m + (sigma / denom) * (m.col(b) * m.col(a).transpose() -
                                               m.col(a) * m.col(b).transpose());
  out.row(a).setZero();
  out.row(b).setZero();
  out.col(a).setZero();
  out.col(b).setZero();
  out(a, b) = sigma;
  out(b, a) = -sigma;
  return {s.num_qubits(), std::move(out)};
}

MeasurementResult measure_z(const CovarianceState& s, std::size_t k, std::mt19937_64& rng) {
  if (k >= s.num_qubits()) throw BadTargets("qubit out of range");
  const double p0 = std::clamp((1.0 + s.expectation_z(k)) / 2, 0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  int outcome = uniform(rng) < p0 ? 0 : 1;
  if (outcome == 0 && p0 < kImpossible) outcome = 1;
  if (outcome == 1 && 1.0 - p0 < kImpossible) outcome = 0;
  return {outcome, outcome == 0 ? p0 : 1.0 - p0, condition_on(s, k, outcome)};
}

MeasurementResult measure_z(const CovarianceState& s, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return measure_z(s, k, rng);
}

std::string measure_all(CovarianceState s, std::mt19937_64& rng) {
  std::string bits(s.num_qubits(), '0');
  for (std::size_t k = 0; k < s.num_qubits(); ++k) {
    MeasurementResult r = measure_z(s, k, rng);
    bits[k] = r.outcome == 0 ? '0' : '1';
    s = std::move(r.state);
  }
  return bits;
}

CovarianceState run_fermionic(const Circuit& c, std::uint64_t initial, const ToleranceConfig& tol) {
  // Validate every op before doing any work so the refusal names the first
  // offending index.
  std::vector<MajoranaRotation> rotations;
  rotations.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    rotations.push_back(operation_to_rotation(c[i], i, c.num_qubits(), tol));
  }
  CovarianceState s = init_covariance(c.num_qubits(), initial);
  for (const auto& r : rotations) evolve_in_place(s, r);
  return s;
}

std::map<std::string, std::int64_t> sample_fermionic(const CovarianceState& s, std::int64_t shots,
                                                     std::uint64_t seed) {
  if (shots < 1) throw BadSampleCount("sample_fermionic: shots must be >= 1");
  std::mt19937_64 rng(seed);
  std::map<std::string, std::int64_t> hist;
  for (std::int64_t i = 0; i < shots; ++i) ++hist[measure_all(s, rng)];
  return hist;
}

}  // namespace matchlift
