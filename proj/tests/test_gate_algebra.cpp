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

#include <array>

#include "matchlift/errors.hpp"
#include "matchlift/gate_algebra.hpp"
#include "test_support.hpp"

namespace matchlift {
namespace {

using namespace testing;

TEST(Kron, MatchesExplicitTensor) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Mat2 a = ginibre(rng, 2), b = ginibre(rng, 2);
    EXPECT_LT(max_abs(kron(a, b) - tensor(a, b)), 1e-14);
  }
}

TEST(BuildPP, LayoutAndBlocks) {
  Rng rng(12);
  const Mat2 a = haar2(rng), b = haar2(rng);
  const Mat4 g = build_pp(a, b);
  EXPECT_LT(max_abs(g - pp_of(a, b)), 1e-15);
  auto [a2, b2] = pp_blocks(g);
  EXPECT_LT(max_abs(a2 - a), 1e-15);
  EXPECT_LT(max_abs(b2 - b), 1e-15);
  EXPECT_EQ(off_block_mass(g), 0.0);
}

TEST(BuildPP, RejectsNonUnitaryBlocks) {
  Mat2 a = Mat2::Identity();
  a(0, 1) = 0.5;
  EXPECT_THROW(build_pp(a, Mat2::Identity()), NonUnitaryInput);
  EXPECT_THROW(build_pp(Mat2::Identity(), 2.0 * Mat2::Identity()), NonUnitaryInput);
}

TEST(BuildPP, ClosedUnderProduct) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Mat2 a1 = haar2(rng), b1 = haar2(rng), a2 = haar2(rng), b2 = haar2(rng);
    const Mat4 g1 = build_pp(a1, b1), g2 = build_pp(a2, b2);
    const Mat4 prod = pp_product(g1, g2);
    EXPECT_LT(max_abs(prod - g1 * g2), 1e-13);
    EXPECT_LT(max_abs(prod - pp_of(a1 * a2, b1 * b2)), 1e-13);
    EXPECT_LT(off_block_mass(prod), 1e-14);
  }
}

TEST(BuildPP, ProductRejectsMixingGates) {
  EXPECT_THROW(pp_product(gates::cnot(), gates::swap()), NotParityPreserving);
  EXPECT_THROW(pp_product(gates::swap(), gates::cnot()), NotParityPreserving);
}

TEST(Unitarity, DefectOfKnownMatrices) {
  EXPECT_LT(unitarity_defect(gates::hadamard()), 1e-15);
  EXPECT_LT(unitarity_defect(gates::fswap()), 1e-15);
  EXPECT_FALSE(is_unitary(Mat2(2.0 * Mat2::Identity()), 1e-9));
}

TEST(GlobalPhase, EqualityUpToPhase) {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const Mat4 u = haar4(rng);
    const double p = uniform(rng, -kPi, kPi);
    EXPECT_TRUE(equal_up_to_global_phase(std::polar(1.0, p) * u, u, 1e-12));
    EXPECT_NEAR(std::abs(std::arg(std::polar(1.0, relative_phase(u, std::polar(1.0, p) * u) - p))), 0, 1e-12);
    EXPECT_FALSE(equal_up_to_global_phase(u, haar4(rng), 1e-6));
  }
}

TEST(GlobalPhase, FlatMatricesCompare) {
  // Every entry of H⊗H has modulus exactly 1/2.
  const Mat4 hh = kron(gates::hadamard(), gates::hadamard());
  EXPECT_TRUE(equal_up_to_global_phase(Complex(0, 1) * hh, hh, 1e-12));
  EXPECT_FALSE(equal_up_to_global_phase(hh, kron(gates::hadamard(), gates::pauli_z() * gates::hadamard()), 1e-6));
  const Mat2 h = gates::hadamard();
  EXPECT_TRUE(equal_up_to_global_phase(Mat2(-h), h, 1e-12));
}

TEST(NonlocalGate, MatchesHamiltonianExponential) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const double a = uniform(rng, -kPi, kPi), b = uniform(rng, -kPi, kPi), c = uniform(rng, -kPi, kPi);
    EXPECT_LT(max_abs(nonlocal_gate(a, b, c) - nl_oracle(a, b, c)), 1e-12);
  }
}

TEST(NonlocalGate, IsParityPreserving) {
  const Mat4 g = nonlocal_gate(0.3, -0.2, 0.7);
  EXPECT_LT(off_block_mass(g), 1e-15);
}

TEST(PPFromAngles, DeterminantRatioIsFourBeta) {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const double beta = uniform(rng, -1, 1);
    const Mat4 g = pp_from_angles(uniform(rng, 0, 1.5), uniform(rng, -3, 3), uniform(rng, -3, 3),
                                  uniform(rng, 0, 1.5), uniform(rng, -3, 3), uniform(rng, -3, 3), beta);
    EXPECT_TRUE(is_unitary(g, 1e-12));
    EXPECT_LT(off_block_mass(g), 1e-15);
    auto [a, b] = pp_blocks(g);
    EXPECT_LT(std::abs(a.determinant() / b.determinant() - std::polar(1.0, 4 * beta)), 1e-12);
  }
}

TEST(PPFromAngles, NonlocalCoreIsSpecialCase) {
  // θ = a − b, φ = a + b, β = c, all phases zero.
  const double a = 0.5, b = 0.2, c = 0.1;
  EXPECT_LT(max_abs(pp_from_angles(a - b, 0, 0, a + b, 0, 0, c) - nl_oracle(a, b, c)), 1e-12);
}

TEST(ZPhase, Convention) {
  const Mat2 z = z_phase(0.4);
  EXPECT_LT(std::abs(z(0, 0) - std::polar(1.0, 0.4)), 1e-15);
  EXPECT_LT(std::abs(z(1, 1) - std::polar(1.0, -0.4)), 1e-15);
  EXPECT_LT(max_abs(z - gates::rz(-0.8)), 1e-15);
}

TEST(Gates, BlockForms) {
  const Mat2 i2 = Mat2::Identity(), x = pauli(1), z = pauli(3);
  EXPECT_LT(max_abs(gates::swap() - pp_of(i2, x)), 1e-15);
  EXPECT_LT(max_abs(gates::iswap() - pp_of(i2, kI * x)), 1e-15);
  EXPECT_LT(max_abs(gates::fswap() - pp_of(z, x)), 1e-15);
  EXPECT_LT(max_abs(gates::tau_swap(0.7) - pp_of(i2, std::polar(1.0, 0.7) * x)), 1e-15);
  EXPECT_LT(max_abs(gates::tau_swap(0) - gates::swap()), 1e-15);
  EXPECT_LT(max_abs(gates::tau_swap(kPi / 2) - gates::iswap()), 1e-15);
}

TEST(Gates, BasisActions) {
  const Mat4 cnot = gates::cnot();
  const std::array<int, 4> perm{0, 1, 3, 2};
  for (int c = 0; c < 4; ++c) EXPECT_EQ(cnot(perm[static_cast<std::size_t>(c)], c), Complex(1, 0));
  const Mat4 cz = gates::cz();
  EXPECT_EQ(cz(3, 3), Complex(-1, 0));
  EXPECT_EQ(cz(1, 1), Complex(1, 0));
  const Mat4 sw = gates::swap();
  EXPECT_EQ(sw(2, 1), Complex(1, 0));
  EXPECT_EQ(sw(1, 2), Complex(1, 0));
}

TEST(Gates, RotationsMatchExponentials) {
  for (int k = 1; k <= 3; ++k) {
    const Mat2 oracle = expi_hermitian(-0.35 * pauli(k));
    const Mat2 r = k == 1 ? gates::rx(0.7) : (k == 2 ? gates::ry(0.7) : gates::rz(0.7));
    EXPECT_LT(max_abs(r - oracle), 1e-14);
  }
}

TEST(Library, NamesAndAliases) {
  EXPECT_LT(max_abs(std::get<Mat4>(gate_library("cx")) - gates::cnot()), 1e-15);
  EXPECT_LT(max_abs(std::get<Mat4>(gate_library("Swap")) - gates::swap()), 1e-15);
  const std::array<double, 3> p{0.3, 0.1, 0.0};
  EXPECT_LT(max_abs(std::get<Mat4>(gate_library("NL", p)) - nl_oracle(0.3, 0.1, 0)), 1e-12);
  EXPECT_TRUE(std::holds_alternative<Mat2>(gate_library("h")));
  EXPECT_EQ(gate_arity("PP"), 7);
  EXPECT_EQ(gate_arity("nope"), -1);
  EXPECT_EQ(gate_qubits("rz"), 1);
  EXPECT_EQ(gate_qubits("TSWAP"), 2);
}

TEST(Library, Errors) {
  EXPECT_THROW(gate_library("FOO"), UnknownGate);
  EXPECT_THROW(gate_library("RX"), BadArity);
  const std::array<double, 1> p{1.0};
  EXPECT_THROW(gate_library("SWAP", p), BadArity);
}

}  // namespace
}  // namespace matchlift
