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

#include "matchlift/statevector.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "matchlift/errors.hpp"

namespace matchlift {

namespace {

// Inserts a zero bit into `k` at each of the positions lo < hi.
inline std::uint64_t insert_zero_bits(std::uint64_t k, std::size_t lo, std::size_t hi) {
  std::uint64_t low_mask = (std::uint64_t{1} << lo) - 1;
  k = (k & low_mask) | ((k & ~low_mask) << 1);
  std::uint64_t high_mask = (std::uint64_t{1} << hi) - 1;
  return (k & high_mask) | ((k & ~high_mask) << 1);
}

inline std::uint64_t insert_zero_bit(std::uint64_t k, std::size_t pos) {
  std::uint64_t mask = (std::uint64_t{1} << pos) - 1;
  return (k & mask) | ((k & ~mask) << 1);
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::uint64_t basis, std::size_t cap)
    : n_(num_qubits) {
  if (num_qubits > cap) {
    throw TooLarge(std::to_string(num_qubits) + " qubits exceeds the statevector cap of " +
                   std::to_string(cap));
  }
  const std::uint64_t dim = std::uint64_t{1} << n_;
  if (basis >= dim) throw BadTargets("basis index out of range");
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  amps_(static_cast<Eigen::Index>(basis)) = 1.0;
}

void StateVector::apply(const Mat2& gate, std::size_t q, const ToleranceConfig& tol) {
  if (q >= n_) throw BadTargets("target out of range");
  if (!is_unitary(gate, tol.tol_unitary)) throw NonUnitaryInput("apply: gate is not unitary");
  const std::size_t pos = bit_position(q);
  const std::uint64_t bit = std::uint64_t{1} << pos;
  const std::uint64_t half = std::uint64_t{1} << (n_ - 1);
  for (std::uint64_t k = 0; k < half; ++k) {
    const auto i0 = static_cast<Eigen::Index>(insert_zero_bit(k, pos));
    const auto i1 = static_cast<Eigen::Index>(i0 | bit);
    const Complex a0 = amps_(i0), a1 = amps_(i1);
    amps_(i0) = gate(0, 0) * a0 + gate(0, 1) * a1;
    amps_(i1) = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
}

void StateVector::apply(const Mat4& gate, std::size_t q0, std::size_t q1, const ToleranceConfig& tol) {
  if (q0 >= n_ || q1 >= n_ || q0 == q1) throw BadTargets("invalid two-qubit targets");
  if (!is_unitary(gate, tol.tol_unitary)) throw NonUnitaryInput("apply: gate is not unitary");
  const std::size_t p0 = bit_position(q0), p1 = bit_position(q1);
  const std::uint64_t b0 = std::uint64_t{1} << p0, b1 = std::uint64_t{1} << p1;
  const std::uint64_t quarter = std::uint64_t{1} << (n_ - 2);
  const auto [lo, hi] = std::minmax(p0, p1);
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t base = insert_zero_bits(k, lo, hi);
    const std::array<Eigen::Index, 4> idx{static_cast<Eigen::Index>(base),
                                          static_cast<Eigen::Index>(base | b1),
                                          static_cast<Eigen::Index>(base | b0),
                                          static_cast<Eigen::Index>(base | b0 | b1)};
    Eigen::Vector4cd in;
    for (int r = 0; r < 4; ++r) in(r) = amps_(idx[r]);
    const Eigen::Vector4cd out = gate * in;
    for (int r = 0; r < 4; ++r) amps_(idx[r]) = out(r);
  }
}

void StateVector::apply(const Operation& op, const ToleranceConfig& tol) {
  if (const auto* m2 = std::get_if<Mat2>(&op.matrix)) {
    if (op.targets.size() != 1) throw BadTargets("single-qubit gate needs one target");
    apply(*m2, op.targets[0], tol);
  } else {
    if (op.targets.size() != 2) throw BadTargets("two-qubit gate needs two targets");
    apply(std::get<Mat4>(op.matrix), op.targets[0], op.targets[1], tol);
  }
}

double StateVector::expectation_z(std::size_t k) const {
  if (k >= n_) throw BadTargets("qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << bit_position(k);
  double e = 0;
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    e += (static_cast<std::uint64_t>(i) & bit ? -1.0 : 1.0) * std::norm(amps_(i));
  }
  return e;
}

std::uint64_t basis_index(const std::string& bits) {
  std::uint64_t idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError("basis label must contain only 0/1");
    idx = (idx << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return idx;
}

std::string basis_label(std::uint64_t index, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t k = 0; k < num_qubits; ++k) {
    if (index >> (num_qubits - 1 - k) & 1U) s[k] = '1';
  }
  return s;
}

StateVector apply(StateVector state, const Operation& op, const ToleranceConfig& tol) {
  state.apply(op, tol);
  return state;
}

StateVector run(const Circuit& c, std::uint64_t initial, const ToleranceConfig& tol) {
  StateVector s(c.num_qubits(), initial);
  for (const auto& op : c.ops()) s.apply(op, tol);
  return s;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c, const ToleranceConfig& tol) {
  if (c.num_qubits() > kUnitaryCap) {
    throw TooLarge("circuit_unitary: " + std::to_string(c.num_qubits()) + " qubits exceeds cap of " +
                   std::to_string(kUnitaryCap));
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << c.num_qubits());
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    u.col(col) = run(c, static_cast<std::uint64_t>(col), tol).amplitudes();
  }
  return u;
}

std::map<std::uint64_t, std::int64_t> sample(const StateVector& state, std::int64_t shots,
                                             std::uint64_t seed) {
  if (shots < 1) throw BadSampleCount("sample: shots must be >= 1");
  const auto& amps = state.amplitudes();
  std::vector<double> weights(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) weights[static_cast<std::size_t>(i)] = std::norm(amps(i));
  std::discrete_distribution<std::uint64_t> dist(weights.begin(), weights.end());
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::int64_t> hist;
  for (std::int64_t s = 0; s < shots; ++s) ++hist[dist(rng)];
  return hist;
}

}  // namespace matchlift
