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

// Random generators and independent reference computations shared by the
// unit and acceptance tests. Nothing here calls into the code under test
// except for matrix containers and the basic gate constants.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "matchlift/circuit.hpp"
#include "matchlift/types.hpp"

namespace matchlift::testing {

using Rng = std::mt19937_64;
constexpr Complex kI{0, 1};

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::MatrixXcd ginibre(Rng& rng, int d) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  return z;
}

// QR of a Ginibre matrix with the phases of R's diagonal divided out.
inline Eigen::MatrixXcd haar(Rng& rng, int d) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(rng, d));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline Mat2 haar2(Rng& rng) { return haar(rng, 2); }
inline Mat4 haar4(Rng& rng) { return haar(rng, 4); }

inline Mat4 su4(Rng& rng) {
  Mat4 u = haar4(rng);
  return u * std::polar(1.0, -std::arg(u.determinant()) / 4);
}

// Block matrix on the even {0,3} / odd {1,2} sectors, built by hand.
inline Mat4 pp_of(const Mat2& a, const Mat2& b) {
  Mat4 g = Mat4::Zero();
  g(0, 0) = a(0, 0);
  g(0, 3) = a(0, 1);
  g(3, 0) = a(1, 0);
  g(3, 3) = a(1, 1);
  g(1, 1) = b(0, 0);
  g(1, 2) = b(0, 1);
  g(2, 1) = b(1, 0);
  g(2, 2) = b(1, 1);
  return g;
}

inline Mat4 random_pp(Rng& rng) { return pp_of(haar2(rng), haar2(rng)); }

inline Mat4 random_matchgate(Rng& rng) {
  const Mat2 a = haar2(rng);
  Mat2 b = haar2(rng);
  b *= std::sqrt(a.determinant() / b.determinant());
  return pp_of(a, b);
}

inline Mat2 pauli(int k) {
  Mat2 m = Mat2::Zero();
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Kronecker product written out independently, first factor on the high bit.
inline Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

inline Mat4 pp2(int i, int j) { return tensor(pauli(i), pauli(j)); }

// exp(iH) for Hermitian H via its eigen-decomposition.
inline Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd ph(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < ph.size(); ++i) ph(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat4 nl_oracle(double a, double b, double c) {
  return expi_hermitian(a * pp2(1, 1) + b * pp2(2, 2) + c * pp2(3, 3));
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// min over phases of max|m − e^{iφ} n|, with φ fitted from the trace.
inline double phase_distance(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& n) {
  const Complex t = (n.adjoint() * m).trace();
  const Complex ph = std::abs(t) > 0 ? t / std::abs(t) : Complex(1, 0);
  return max_abs(m - ph * n);
}

// Linear operator entropy 1 − Σ s⁴ / 16 from the operator-Schmidt
// coefficients of the realigned matrix.
inline double operator_entropy(const Mat4& u) {
  Eigen::Matrix4cd r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = u(2 * i + k, 2 * j + l);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(r);
  double s4 = 0;
  for (int i = 0; i < 4; ++i) s4 += std::pow(svd.singularValues()(i), 4);
  return 1 - s4 / 16;
}

// Entangling power normalized to 1 for CNOT, from operator entropies:
// 2·(E(U) + E(U·SWAP) − E(SWAP)).
inline double entangling_power_oracle(const Mat4& u) {
  Mat4 s = Mat4::Zero();
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
  return 2 * (operator_entropy(u) + operator_entropy(u * s) - operator_entropy(s));
}

// Majorana operators c_{2k} = Z..Z X_k, c_{2k+1} = Z..Z Y_k on n qubits.
inline Eigen::MatrixXcd majorana(int p, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  const int k = p / 2;
  for (int q = 0; q < n; ++q) {
    Mat2 f = q < k ? pauli(3) : (q == k ? pauli(p % 2 == 0 ? 1 : 2) : pauli(0));
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
    m = next;
  }
  return m;
}

// Random nearest-neighbor circuit of matchgates and diagonal phase gates.
inline Circuit random_matchgate_circuit(Rng& rng, std::size_t n, std::size_t depth) {
  Circuit c(n);
  for (std::size_t d = 0; d < depth; ++d) {
    if (n >= 2 && uniform(rng, 0, 1) < 0.75) {
      const auto q = static_cast<std::size_t>(uniform(rng, 0, static_cast<double>(n - 1)));
      const std::size_t q0 = std::min(q, n - 2);
      if (uniform(rng, 0, 1) < 0.5) {
        c.add(Operation::pair("M", random_matchgate(rng), q0, q0 + 1));
      } else {
        c.add(Operation::pair("M", random_matchgate(rng), q0 + 1, q0));
      }
    } else {
      const auto q = std::min(static_cast<std::size_t>(uniform(rng, 0, static_cast<double>(n))), n - 1);
      Mat2 d2 = Mat2::Zero();
      d2(0, 0) = std::polar(1.0, uniform(rng, -kPi, kPi));
      d2(1, 1) = std::polar(1.0, uniform(rng, -kPi, kPi));
      c.add(Operation::single("P", d2, q));
    }
  }
  return c;
}

}  // namespace matchlift::testing
