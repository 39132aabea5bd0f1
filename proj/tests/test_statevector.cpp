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

#include <gtest/gtest.h>

#include "matchlift/errors.hpp"
#include "matchlift/statevector.hpp"
#include "test_support.hpp"

namespace matchlift {
namespace {

using namespace testing;

// Dense operator of `g` on qubits (q0, q1) of n, built from basis columns.
Eigen::MatrixXcd embed(const Mat4& g, std::size_t q0, std::size_t q1, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t b0 = col >> (n - 1 - q0) & 1U, b1 = col >> (n - 1 - q1) & 1U;
    for (std::size_t o0 = 0; o0 < 2; ++o0) {
      for (std::size_t o1 = 0; o1 < 2; ++o1) {
        std::size_t row = col;
        row = (row & ~(std::size_t{1} << (n - 1 - q0))) | (o0 << (n - 1 - q0));
        row = (row & ~(std::size_t{1} << (n - 1 - q1))) | (o1 << (n - 1 - q1));
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            g(static_cast<Eigen::Index>(2 * o0 + o1), static_cast<Eigen::Index>(2 * b0 + b1));
      }
    }
  }
  return m;
}

TEST(StateVector, InitialBasisState) {
  StateVector s(3, basis_index("101"));
  EXPECT_EQ(s.amplitude(5), Complex(1, 0));
  EXPECT_NEAR(s.expectation_z(0), -1, 1e-15);
  EXPECT_NEAR(s.expectation_z(1), 1, 1e-15);
  EXPECT_NEAR(s.expectation_z(2), -1, 1e-15);
}

TEST(StateVector, SingleQubitGateOnMostSignificantBit) {
  StateVector s(2);
  s.apply(gates::pauli_x(), 0);
  EXPECT_EQ(s.amplitude(basis_index("10")), Complex(1, 0));
}

TEST(StateVector, TwoQubitGatesMatchDenseEmbedding) {
  Rng rng(41);
  const std::size_t n = 4;
  for (int t = 0; t < 40; ++t) {
    const Mat4 g = haar4(rng);
    auto q0 = static_cast<std::size_t>(uniform(rng, 0, 4)) % n;
    auto q1 = static_cast<std::size_t>(uniform(rng, 0, 4)) % n;
    if (q0 == q1) q1 = (q0 + 1) % n;
    Eigen::VectorXcd psi = ginibre(rng, 16).col(0);
    psi.normalize();
    StateVector s(n);
    s.amplitudes() = psi;
    s.apply(g, q0, q1);
    EXPECT_LT(max_abs(s.amplitudes() - embed(g, q0, q1, n) * psi), 1e-12);
  }
}

TEST(StateVector, ReversedTargetsEqualSwapConjugation) {
  Rng rng(42);
  const Mat4 g = haar4(rng);
  const Mat4 sw = gates::swap();
  Eigen::VectorXcd psi = ginibre(rng, 8).col(0);
  psi.normalize();
  StateVector a(3), b(3);
  a.amplitudes() = psi;
  b.amplitudes() = psi;
  a.apply(g, 2, 1);
  b.apply(Mat4(sw * g * sw), 1, 2);
  EXPECT_LT(max_abs(a.amplitudes() - b.amplitudes()), 1e-13);
}

TEST(StateVector, Errors) {
  StateVector s(2);
  EXPECT_THROW(s.apply(gates::hadamard(), 2), BadTargets);
  EXPECT_THROW(s.apply(gates::cz(), 1, 1), BadTargets);
  EXPECT_THROW(s.apply(Mat2(2.0 * Mat2::Identity()), 0), NonUnitaryInput);
  EXPECT_THROW(StateVector(kStateVectorCap + 1), TooLarge);
  EXPECT_THROW(circuit_unitary(Circuit(kUnitaryCap + 1)), TooLarge);
}

TEST(StateVector, BellState) {
  Circuit c(2);
  c.add(Operation::named("H", {0}));
  c.add(Operation::named("CNOT", {0, 1}));
  const StateVector s = run(c);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_LT(std::abs(s.amplitude(0) - r), 1e-15);
  EXPECT_LT(std::abs(s.amplitude(3) - r), 1e-15);
  EXPECT_LT(std::abs(s.amplitude(1)), 1e-15);
}

TEST(StateVector, CircuitUnitaryComposes) {
  Rng rng(43);
  Circuit c(3);
  const Mat4 g1 = haar4(rng), g2 = haar4(rng);
  const Mat2 a = haar2(rng);
  c.add(Operation::pair("U", g1, 0, 1));
  c.add(Operation::single("A", a, 2));
  c.add(Operation::pair("V", g2, 2, 1));
  const Eigen::MatrixXcd u = circuit_unitary(c);
  Eigen::MatrixXcd a_full = embed(tensor(Mat2::Identity(), a), 1, 2, 3);
  const Eigen::MatrixXcd oracle = embed(g2, 2, 1, 3) * a_full * embed(g1, 0, 1, 3);
  EXPECT_LT(max_abs(u - oracle), 1e-12);
}

TEST(StateVector, NormPreserved) {
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    Circuit c(5);
    for (int k = 0; k < 30; ++k) {
      const auto q = static_cast<std::size_t>(uniform(rng, 0, 4));
      c.add(Operation::pair("U", haar4(rng), q, q + 1));
    }
    EXPECT_NEAR(run(c, static_cast<std::uint64_t>(t)).norm(), 1, 1e-12);
  }
}

TEST(BasisLabels, RoundTrip) {
  EXPECT_EQ(basis_index("0110"), 6U);
  EXPECT_EQ(basis_label(6, 4), "0110");
  for (std::uint64_t i = 0; i < 32; ++i) EXPECT_EQ(basis_index(basis_label(i, 5)), i);
  EXPECT_THROW(basis_index("012"), ParseError);
}

TEST(Sampling, DeterministicAndBinomial) {
  Circuit c(2);
  c.add(Operation::named("H", {0}));
  c.add(Operation::named("CNOT", {0, 1}));
  const StateVector s = run(c);
  const auto h1 = sample(s, 10000, 5);
  const auto h2 = sample(s, 10000, 5);
  EXPECT_EQ(h1, h2);
  EXPECT_EQ(h1.size(), 2U);
  // 5σ binomial band around 5000.
  EXPECT_NEAR(static_cast<double>(h1.at(0)), 5000, 250);
  EXPECT_EQ(h1.at(0) + h1.at(3), 10000);
  EXPECT_THROW(sample(s, 0, 1), BadSampleCount);
}

}  // namespace
}  // namespace matchlift
