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

#include "matchlift/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "matchlift/errors.hpp"
#include "matchlift/statevector.hpp"

namespace matchlift {

namespace {

constexpr Complex kI{0, 1};

bool is_exact_identity(const Mat2& a) { return (a - Mat2::Identity()).cwiseAbs().maxCoeff() <= 1e-15; }

Mat2 diag2(Complex x, Complex y) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  return m;
}

Mat2 mat_pow(const Mat2& d, std::int64_t k) {
  // Only used on diagonal matrices.
  return diag2(std::pow(d(0, 0), static_cast<double>(k)), std::pow(d(1, 1), static_cast<double>(k)));
}

Eigen::Vector4cd diag_pow(const Eigen::Vector4cd& d, std::int64_t k) {
  Eigen::Vector4cd out;
  for (int r = 0; r < 4; ++r) out(r) = std::polar(1.0, static_cast<double>(k) * std::arg(d(r)));
  return out;
}

// Positive representative of x mod m.
double pmod(double x, double m) {
  double r = std::fmod(x, m);
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint64_t Encoding::encode_basis(std::uint64_t logical_index) const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < logical_count; ++k) {
    const std::uint64_t bit = logical_index >> (logical_count - 1 - k) & 1U;
    out = (out << 2) | (bit * 3U);
  }
  return out;
}

std::optional<std::string> decode_readout(const std::string& physical_bits) {
  if (physical_bits.size() % 2 != 0) return std::nullopt;
  std::string logical;
  for (std::size_t k = 0; k < physical_bits.size(); k += 2) {
    if (physical_bits[k] != physical_bits[k + 1]) return std::nullopt;
    logical.push_back(physical_bits[k]);
  }
  return logical;
}

Mat4 StripResult::left() const { return assemble_pp(z_phase(tau1), z_phase(tau2)); }
Mat4 StripResult::right() const { return assemble_pp(z_phase(tau3), z_phase(tau4)); }
Mat4 StripResult::reconstruct() const {
  return std::polar(1.0, global_phase) * left() * nonlocal_gate(core) * right();
}

StripResult strip_z_rotations(const Mat4& g, const ToleranceConfig& tol) {
  const PPDecomposition d = decompose_pp(g, tol);
  const PPParams& p = d.params;
  StripResult s;
  s.core = nonlocal_from_pp(p);
  // zp(τ1)·e^{iβ}exp(iθσx)·zp(τ3) puts phase τ1+τ3 on the diagonal and τ1−τ3
  // on the off-diagonal; match them to alpha and mu (gamma, nu for the odd block).
  s.tau1 = (p.alpha + p.mu) / 2;
  s.tau3 = (p.alpha - p.mu) / 2;
  s.tau2 = (p.gamma + p.nu) / 2;
  s.tau4 = (p.gamma - p.nu) / 2;
  s.global_phase = d.global_phase;
  return s;
}

Operation logical_single_qubit(const Mat2& a, std::size_t logical, const std::string& name) {
  auto [p0, p1] = Encoding::pair(logical);
  return Operation::pair(name, assemble_pp(a, a), p0, p1);
}

Eigen::Vector4cd entangler_diagonal(const NonlocalTriple& t) {
  const double a = t.a, b = t.b, c = t.c;
  Eigen::Vector4cd d;
  d << std::polar(1.0, a - b + c), std::polar(1.0, a + b - c), -std::polar(1.0, -(a + b + c)),
      -std::polar(1.0, -a + b + c);
  return d;
}

EntanglerBlock build_entangler_block(const NonlocalTriple& core, std::size_t i) {
  const std::size_t q0 = 2 * i + 1, q1 = 2 * i + 2;
  const Mat2 h = gates::hadamard(), x = gates::pauli_x();
  EntanglerBlock blk;
  blk.ops.push_back(Operation::pair("G", assemble_pp(h, h), q0, q1));
  Operation nl = Operation::pair("NL", nonlocal_gate(core), q0, q1, {core.a, core.b, core.c});
  nl.target_gate = true;
  blk.ops.push_back(std::move(nl));
  blk.ops.push_back(Operation::pair("G", assemble_pp(x, x), q0, q1));
  blk.ops.push_back(Operation::pair("G", assemble_pp(h, h), q0, q1));
  blk.diagonal = entangler_diagonal(core);
  return blk;
}

double zz_strength(const Eigen::Vector4cd& d) {
  return std::arg(d(0) * d(3) * std::conj(d(1)) * std::conj(d(2))) / 4;
}

Mat4 EntanglerPlan::logical_effect(const Eigen::Vector4cd& diagonal) const {
  const Mat4 before = diag_pow(diagonal, blocks_before).asDiagonal();
  const Mat4 after = diag_pow(diagonal, blocks_after).asDiagonal();
  const Mat2 id = Mat2::Identity();
  return kron(post_i, post_j) * after * kron(mid_i, id) * before * kron(pre_i, id);
}

EntanglerPlan plan_entangler(const NonlocalTriple& core, double epsilon, std::int64_t r_max,
                             const ToleranceConfig& tol) {
  if (!(epsilon > 0)) throw std::invalid_argument("plan_entangler: epsilon must be positive");
  if (r_max < 1) throw std::invalid_argument("plan_entangler: r_max must be >= 1");
  const Eigen::Vector4cd d = entangler_diagonal(core);
  EntanglerPlan plan;
  plan.c_eff = zz_strength(d);
  if (std::abs(std::polar(1.0, 4 * plan.c_eff) - 1.0) <= tol.tol_classify) {
    throw TargetIsMatchgate("target gate is a matchgate (det A = det B): its Z⊗Z strength " +
                            std::to_string(plan.c_eff) + " is a multiple of pi/2");
  }
  const double cm = pmod(plan.c_eff, kPi / 2);

  // Smallest m whose interleaved construction exists: 2mc mod π in [π/4, 3π/4].
  std::int64_t m_star = 0;
  for (std::int64_t m = 1; 2 * m <= r_max; ++m) {
    const double delta = pmod(2.0 * static_cast<double>(m) * cm, kPi);
    if (delta >= kPi / 4 - 1e-15 && delta <= 3 * kPi / 4 + 1e-15) {
      m_star = m;
      break;
    }
  }
  const std::int64_t scan_limit = m_star ? std::min(r_max, 2 * m_star) : r_max;

  const Mat4 cz = gates::cz();
  for (std::int64_t r = 1; r <= scan_limit; ++r) {
    const double dist = std::abs(pmod(static_cast<double>(r) * cm, kPi / 2) - kPi / 4);
    if (dist > epsilon) continue;
    plan.mode = EntanglerPlan::Mode::kRepeat;
    plan.repetitions = r;
    plan.blocks_before = r;
    plan.blocks_after = 0;
    const Eigen::Vector4cd dr = diag_pow(d, r);
    const double q00 = std::arg(dr(0)), q01 = std::arg(dr(1)), q10 = std::arg(dr(2));
    plan.post_i = diag2(1.0, std::polar(1.0, q00 - q10));
    plan.post_j = diag2(1.0, std::polar(1.0, q00 - q01));
    plan.global_phase = q00;
    plan.residual_error = dist;
    return plan;
  }
  if (!m_star) {
    throw SynthesisLimit("plan_entangler: no CZ recipe within r_max = " + std::to_string(r_max) +
                         " blocks for c = " + std::to_string(plan.c_eff));
  }

  const std::int64_t m = m_star;
  const double delta = pmod(2.0 * static_cast<double>(m) * cm, kPi);
  const double cot = std::cos(delta) / std::sin(delta);
  const double t = std::acos(std::clamp(cot * cot, -1.0, 1.0));
  const Mat2 rx = gates::rx(t);
  // Control on logical j: block row/column index is 2·x_i + x_j.
  const Mat2 d0 = mat_pow(diag2(d(0), d(2)), m);
  const Mat2 d1 = mat_pow(diag2(d(1), d(3)), m);
  const Mat2 v0 = d0 * rx * d0;
  const Mat2 v1 = d1 * rx * d1;
  Eigen::ComplexSchur<Mat2> schur(v0.adjoint() * v1);
  const Mat2 e = schur.matrixU();
  const Complex lambda = schur.matrixT()(0, 0);

  plan.mode = EntanglerPlan::Mode::kInterleaved;
  plan.repetitions = 2 * m;
  plan.blocks_before = m;
  plan.blocks_after = m;
  plan.pre_i = e;
  plan.mid_i = rx;
  plan.post_i = e.adjoint() * v0.adjoint();
  plan.post_j = diag2(1.0, 1.0 / lambda);

  const Mat4 eff = plan.logical_effect(d);
  plan.global_phase = std::arg((cz.adjoint() * eff).trace());
  plan.residual_error =
      (eff - std::polar(1.0, plan.global_phase) * cz).cwiseAbs().maxCoeff();
  if (plan.residual_error > 1e-8) {
    throw DecompositionFailure("plan_entangler: interleaved recipe residual " +
                               std::to_string(plan.residual_error));
  }
  return plan;
}

namespace {

class Emitter {
 public:
  Emitter(CompiledCircuit& out, const Mat4& target) : out_(out), target_(target) {
    const StripResult& s = out.strip;
    const Mat2 h = gates::hadamard(), x = gates::pauli_x();
    // Fold the stripped Z rotations into the matchgates around the target so
    // that pre·target·post realizes e^{iψ}·G(H,H)G(X,X)NL G(H,H).
    pre_ = assemble_pp(z_phase(s.tau3).adjoint() * h, z_phase(s.tau4).adjoint() * h);
    post_ = assemble_pp(h * x * z_phase(s.tau1).adjoint(), h * x * z_phase(s.tau2).adjoint());
  }

  std::size_t routing_swaps = 0;

  void single(const Mat2& a, std::size_t q) {
    out_.physical.add(logical_single_qubit(a, q));
  }

  void block(std::size_t i) {
    const std::size_t q0 = 2 * i + 1, q1 = 2 * i + 2;
    out_.physical.add(Operation::pair("G", pre_, q0, q1));
    Operation t = Operation::pair("TARGET", target_, q0, q1);
    t.target_gate = true;
    out_.physical.add(std::move(t));
    out_.physical.add(Operation::pair("G", post_, q0, q1));
  }

  // CZ on logical (i, i+1).
  void adjacent_cz(std::size_t i) {
    const EntanglerPlan& p = out_.plan;
    if (!is_exact_identity(p.pre_i)) single(p.pre_i, i);
    for (std::int64_t r = 0; r < p.blocks_before; ++r) block(i);
    if (p.blocks_after > 0 && !is_exact_identity(p.mid_i)) single(p.mid_i, i);
    for (std::int64_t r = 0; r < p.blocks_after; ++r) block(i);
    if (!is_exact_identity(p.post_i)) single(p.post_i, i);
    if (!is_exact_identity(p.post_j)) single(p.post_j, i + 1);
    out_.global_phase += p.global_phase + static_cast<double>(p.repetitions) * out_.strip.global_phase;
  }

  void cz(std::size_t i, std::size_t j) {
    auto [lo, hi] = std::minmax(i, j);
    if (hi - lo == 1) {
      adjacent_cz(lo);
      return;
    }
    // Walk hi down to lo+1, interact, walk back.
    for (std::size_t k = hi; k > lo + 1; --k) adjacent_swap(k - 1);
    adjacent_cz(lo);
    for (std::size_t k = lo + 1; k < hi; ++k) adjacent_swap(k);
    routing_swaps += 2 * (hi - lo - 1);
  }

  void cnot(std::size_t c, std::size_t t) {
    const Mat2 h = gates::hadamard();
    single(h, t);
    cz(c, t);
    single(h, t);
  }

  // SWAP of logical (i, i+1) from three CNOTs.
  void adjacent_swap(std::size_t i) {
    cnot(i, i + 1);
    cnot(i + 1, i);
    cnot(i, i + 1);
  }

  void swap(std::size_t i, std::size_t j) {
    auto [lo, hi] = std::minmax(i, j);
    for (std::size_t k = lo; k < hi; ++k) adjacent_swap(k);
    for (std::size_t k = hi - 1; k > lo; --k) adjacent_swap(k - 1);
    if (hi - lo > 1) routing_swaps += 2 * (hi - lo) - 2;
  }

 private:
  CompiledCircuit& out_;
  Mat4 target_;
  Mat4 pre_, post_;
};

}  // namespace

CompiledCircuit compile(const Circuit& logical, const Mat4& target, double epsilon,
                        const CompileOptions& opts) {
  opts.tol.validate();
  if (!(epsilon > 0)) throw std::invalid_argument("compile: epsilon must be positive");
  const Classification cls = classify(target, opts.tol);
  if (!cls.is_pp) {
    throw TargetNotPP("target gate is not parity preserving: it mixes the even and odd sectors");
  }
  if (cls.is_matchgate) {
    throw TargetIsMatchgate(
        "target gate is a matchgate: det A = det B, so it generates only classically "
        "simulatable circuits");
  }

  CompiledCircuit out;
  out.encoding.logical_count = logical.num_qubits();
  out.physical = Circuit(out.encoding.physical_count());
  out.epsilon = epsilon;
  out.strip = strip_z_rotations(target, opts.tol);
  out.plan = plan_entangler(out.strip.core, epsilon, opts.r_max, opts.tol);

  const Mat4 cz = gates::cz(), cnot = gates::cnot(), swp = gates::swap();
  const Mat4 cnot_rev = swp * cnot * swp;
  const double tol = std::max(opts.tol.tol_unitary, 1e-9);

  Emitter em(out, target);
  for (std::size_t k = 0; k < logical.size(); ++k) {
    const Operation& op = logical[k];
    ProvenanceEntry prov;
    prov.logical_op = k;
    prov.begin = out.physical.size();
    em.routing_swaps = 0;
    if (const auto* a = std::get_if<Mat2>(&op.matrix)) {
      if (!is_unitary(*a, opts.tol.tol_unitary)) {
        throw NonUnitaryInput("logical op " + std::to_string(k) + " is not unitary");
      }
      em.single(*a, op.targets[0]);
    } else {
      const Mat4& m = std::get<Mat4>(op.matrix);
      const std::size_t q0 = op.targets[0], q1 = op.targets[1];
      if (equal_up_to_global_phase(m, cz, tol)) {
        em.cz(q0, q1);
      } else if (equal_up_to_global_phase(m, cnot, tol)) {
        em.cnot(q0, q1);
      } else if (equal_up_to_global_phase(m, cnot_rev, tol)) {
        em.cnot(q1, q0);
      } else if (equal_up_to_global_phase(m, swp, tol)) {
        em.swap(q0, q1);
      } else {
        throw UnsupportedLogicalGate("logical op " + std::to_string(k) + " ('" + op.name +
                                     "') is not a single-qubit gate, CZ, CNOT or SWAP");
      }
    }
    prov.end = out.physical.size();
    prov.routing_swaps = em.routing_swaps;
    out.provenance.push_back(prov);
  }
  return out;
}

FidelityReport verify(const Circuit& physical, const Circuit& logical, const VerifyOptions& opts) {
  const std::size_t nl = logical.num_qubits();
  if (physical.num_qubits() != 2 * nl) {
    throw DimensionMismatch("verify: physical circuit has " + std::to_string(physical.num_qubits()) +
                            " qubits, expected " + std::to_string(2 * nl));
  }
  const Encoding enc{nl};
  const std::uint64_t dim = std::uint64_t{1} << nl;
  FidelityReport rep;

  if (!opts.sampled) {
    if (physical.num_qubits() > kExactVerifyCap) {
      throw TooLarge("verify: exact mode is limited to " + std::to_string(kExactVerifyCap) +
                     " physical qubits; use sampled mode");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd restricted(d, d);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const StateVector s = run(physical, enc.encode_basis(b), opts.tol);
      for (std::uint64_t a = 0; a < dim; ++a) {
        restricted(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            s.amplitude(enc.encode_basis(a));
      }
    }
    const Eigen::MatrixXcd v = circuit_unitary(logical, opts.tol);
    const Complex tr = (v.adjoint() * restricted).trace();
    const double dd = static_cast<double>(dim);
    rep.fidelity = std::norm(tr) / (dd * dd);
    rep.leakage = std::max(0.0, 1 - restricted.squaredNorm() / dd);
    rep.phase = std::arg(tr);
    rep.exact = true;
    if (nl == 2 && rep.leakage <= 1e-6) {
      try {
        const Mat4 u = restricted;
        rep.logical_entangling_power = entangling_power_closed(kak(u, opts.tol).core);
        rep.non_entangling = *rep.logical_entangling_power <= 1e-9;
      } catch (const Error&) {
        // Not unitary enough to factor; leave unset.
      }
    }
    return rep;
  }

  if (opts.samples == 0) throw BadSampleCount("verify: sampled mode needs at least one sample");
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  double fid = 0, leak = 0;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();

    StateVector lg(nl);
    lg.amplitudes() = psi;
    for (const auto& op : logical.ops()) lg.apply(op, opts.tol);

    StateVector ph(physical.num_qubits());
    ph.amplitudes().setZero();
    for (std::uint64_t b = 0; b < dim; ++b) {
      ph.amplitudes()(static_cast<Eigen::Index>(enc.encode_basis(b))) = psi(static_cast<Eigen::Index>(b));
    }
    for (const auto& op : physical.ops()) ph.apply(op, opts.tol);

    Eigen::VectorXcd proj(static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
      proj(static_cast<Eigen::Index>(b)) = ph.amplitude(enc.encode_basis(b));
    }
    fid += std::norm(lg.amplitudes().dot(proj));
    leak += std::max(0.0, 1 - proj.squaredNorm());
  }
  rep.exact = false;
  rep.samples = opts.samples;
  rep.fidelity = fid / static_cast<double>(opts.samples);
  rep.leakage = leak / static_cast<double>(opts.samples);
  return rep;
}

FidelityReport verify(const CompiledCircuit& compiled, const Circuit& logical,
                      const VerifyOptions& opts) {
  FidelityReport rep = verify(compiled.physical, logical, opts);
  rep.provenance = compiled.provenance;
  return rep;
}

}  // namespace matchlift
