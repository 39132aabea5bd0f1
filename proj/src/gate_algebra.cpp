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

#include "matchlift/gate_algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "matchlift/errors.hpp"

namespace matchlift {

namespace {

constexpr std::array<int, 2> kEven{0, 3};
constexpr std::array<int, 2> kOdd{1, 2};
constexpr Complex kI{0.0, 1.0};

template <typename M>
double max_abs(const M& m) {
  return m.cwiseAbs().maxCoeff();
}

template <typename M>
int anchor_index(const M& n) {
  int best = 0;
  for (int k = 1; k < n.size(); ++k) {
    if (std::abs(n(k)) > std::abs(n(best))) best = k;
  }
  return best;
}

template <typename M>
bool equal_phase_impl(const M& m, const M& n, double tol) {
  int k = anchor_index(n);
  if (std::abs(m(k)) <= tol) return max_abs(n) <= tol;
  Complex rot = n(k) / m(k);
  rot /= std::abs(rot);
  return max_abs(M(rot * m - n)) <= tol;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

void ToleranceConfig::validate() const {
  for (double t : {tol_unitary, tol_classify, tol_phase}) {
    if (!(t > 0.0 && t < 1e-2)) {
      throw std::invalid_argument("tolerances must lie in (0, 1e-2)");
    }
  }
}

double unitarity_defect(const Mat2& m) { return max_abs(Mat2(m * m.adjoint() - Mat2::Identity())); }
double unitarity_defect(const Mat4& m) { return max_abs(Mat4(m * m.adjoint() - Mat4::Identity())); }
bool is_unitary(const Mat2& m, double tol) { return m.allFinite() && unitarity_defect(m) <= tol; }
bool is_unitary(const Mat4& m, double tol) { return m.allFinite() && unitarity_defect(m) <= tol; }

double off_block_mass(const Mat4& m) {
  double worst = 0.0;
  for (int r : kEven) {
    for (int c : kOdd) {
      worst = std::max({worst, std::abs(m(r, c)), std::abs(m(c, r))});
    }
  }
  return worst;
}

Mat4 assemble_pp(const Mat2& even, const Mat2& odd) {
  Mat4 g = Mat4::Zero();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      g(kEven[r], kEven[c]) = even(r, c);
      g(kOdd[r], kOdd[c]) = odd(r, c);
    }
  }
  return g;
}

Mat4 build_pp(const Mat2& even, const Mat2& odd, const ToleranceConfig& tol) {
  if (!is_unitary(even, tol.tol_unitary) || !is_unitary(odd, tol.tol_unitary)) {
    throw NonUnitaryInput("build_pp: block is not unitary");
  }
  return assemble_pp(even, odd);
}

std::pair<Mat2, Mat2> pp_blocks(const Mat4& g) {
  Mat2 even, odd;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      even(r, c) = g(kEven[r], kEven[c]);
      odd(r, c) = g(kOdd[r], kOdd[c]);
    }
  }
  return {even, odd};
}

Mat4 pp_product(const Mat4& g1, const Mat4& g2, const ToleranceConfig& tol) {
  if (off_block_mass(g1) > tol.tol_classify || off_block_mass(g2) > tol.tol_classify) {
    throw NotParityPreserving("pp_product: factor mixes parity sectors");
  }
  auto [a, b] = pp_blocks(g1);
  auto [c, d] = pp_blocks(g2);
  return assemble_pp(a * c, b * d);
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

bool equal_up_to_global_phase(const Mat4& m, const Mat4& n, double tol) {
  return equal_phase_impl(m, n, tol);
}

bool equal_up_to_global_phase(const Mat2& m, const Mat2& n, double tol) {
  return equal_phase_impl(m, n, tol);
}

double relative_phase(const Mat4& m, const Mat4& n) {
  int k = anchor_index(n);
  return std::arg(n(k) / m(k));
}

Mat4 nonlocal_gate(double a, double b, double c) {
  Complex ec = std::polar(1.0, c);
  Complex emc = std::polar(1.0, -c);
  Mat4 u = Mat4::Zero();
  u(0, 0) = u(3, 3) = std::cos(a - b) * ec;
  u(0, 3) = u(3, 0) = kI * std::sin(a - b) * ec;
  u(1, 1) = u(2, 2) = std::cos(a + b) * emc;
  u(1, 2) = u(2, 1) = kI * std::sin(a + b) * emc;
  return u;
}

Mat4 pp_from_angles(double theta, double alpha, double gamma, double phi, double mu,
                    double nu, double beta) {
  Mat2 a, b;
  a << std::cos(theta) * std::polar(1.0, beta + alpha), kI * std::sin(theta) * std::polar(1.0, beta + mu),
      kI * std::sin(theta) * std::polar(1.0, beta - mu), std::cos(theta) * std::polar(1.0, beta - alpha);
  b << std::cos(phi) * std::polar(1.0, -beta + gamma), kI * std::sin(phi) * std::polar(1.0, -beta + nu),
      kI * std::sin(phi) * std::polar(1.0, -beta - nu), std::cos(phi) * std::polar(1.0, -beta - gamma);
  return assemble_pp(a, b);
}

Mat2 z_phase(double t) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, t);
  m(1, 1) = std::polar(1.0, -t);
  return m;
}

namespace gates {

Mat2 identity2() { return Mat2::Identity(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 hadamard() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Mat2 phase_s() {
  Mat2 m;
  m << 1, 0, 0, kI;
  return m;
}

Mat2 phase_t() {
  Mat2 m;
  m << 1, 0, 0, std::polar(1.0, kPi / 4);
  return m;
}

Mat2 rx(double theta) {
  Mat2 m;
  m << std::cos(theta / 2), -kI * std::sin(theta / 2), -kI * std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

Mat2 ry(double theta) {
  Mat2 m;
  m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

Mat2 rz(double theta) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

Mat4 identity4() { return Mat4::Identity(); }

Mat4 swap() { return assemble_pp(identity2(), pauli_x()); }

Mat4 iswap() { return assemble_pp(identity2(), kI * pauli_x()); }

Mat4 fswap() { return assemble_pp(pauli_z(), pauli_x()); }

Mat4 cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

Mat4 cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

Mat4 tau_swap(double tau) { return assemble_pp(identity2(), std::polar(1.0, tau) * pauli_x()); }

}  // namespace gates

namespace {

struct LibraryEntry {
  const char* name;
  int qubits;
  int arity;
};

constexpr std::array<LibraryEntry, 18> kLibrary{{
    {"I", 1, 0},     {"X", 1, 0},     {"Y", 1, 0},     {"Z", 1, 0},    {"H", 1, 0},
    {"S", 1, 0},     {"T", 1, 0},     {"RX", 1, 1},    {"RY", 1, 1},   {"RZ", 1, 1},
    {"SWAP", 2, 0},  {"ISWAP", 2, 0}, {"FSWAP", 2, 0}, {"CZ", 2, 0},   {"CNOT", 2, 0},
    {"NL", 2, 3},    {"TSWAP", 2, 1}, {"PP", 2, 7},
}};

const LibraryEntry* find_entry(std::string_view name) {
  std::string key = upper(name);
  if (key == "CX") key = "CNOT";
  for (const auto& e : kLibrary) {
    if (key == e.name) return &e;
  }
  return nullptr;
}

}  // namespace

int gate_arity(std::string_view name) {
  const auto* e = find_entry(name);
  return e ? e->arity : -1;
}

int gate_qubits(std::string_view name) {
  const auto* e = find_entry(name);
  return e ? e->qubits : 0;
}

GateMatrix gate_library(std::string_view name, std::span<const double> params) {
  const auto* e = find_entry(name);
  if (e == nullptr) throw UnknownGate("unknown gate '" + std::string(name) + "'");
  if (static_cast<int>(params.size()) != e->arity) {
    throw BadArity("gate " + std::string(e->name) + " takes " + std::to_string(e->arity) +
                   " parameter(s), got " + std::to_string(params.size()));
  }
  const std::string key = e->name;
  const auto& p = params;
  if (key == "I") return gates::identity2();
  if (key == "X") return gates::pauli_x();
  if (key == "Y") return gates::pauli_y();
  if (key == "Z") return gates::pauli_z();
  if (key == "H") return gates::hadamard();
  if (key == "S") return gates::phase_s();
  if (key == "T") return gates::phase_t();
  if (key == "RX") return gates::rx(p[0]);
  if (key == "RY") return gates::ry(p[0]);
  if (key == "RZ") return gates::rz(p[0]);
  if (key == "SWAP") return gates::swap();
  if (key == "ISWAP") return gates::iswap();
  if (key == "FSWAP") return gates::fswap();
  if (key == "CZ") return gates::cz();
  if (key == "CNOT") return gates::cnot();
  if (key == "NL") return nonlocal_gate(p[0], p[1], p[2]);
  if (key == "TSWAP") return gates::tau_swap(p[0]);
  return pp_from_angles(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
}

}  // namespace matchlift
