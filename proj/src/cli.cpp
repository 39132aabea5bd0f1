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

#include "matchlift/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "matchlift/circuit_io.hpp"
#include "matchlift/compiler.hpp"
#include "matchlift/errors.hpp"
#include "matchlift/fermion.hpp"
#include "matchlift/gate_analysis.hpp"
#include "matchlift/statevector.hpp"

namespace matchlift::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool json_out = false;
  bool strict = false;
  double tol_classify = 1e-9;
  double tol_unitary = 1e-9;

  ToleranceConfig tol() const {
    ToleranceConfig t;
    t.tol_classify = tol_classify;
    t.tol_unitary = tol_unitary;
    t.validate();
    return t;
  }
};

// Human-readable numbers; rounding noise below 1e-14 prints as 0.
double clean(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

std::string num(double x) {
  std::ostringstream ss;
  ss << std::setprecision(12) << clean(x);
  return ss.str();
}

std::string num(Complex z) {
  const double re = clean(z.real()), im = clean(z.imag());
  std::ostringstream ss;
  ss << std::setprecision(12) << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return ss.str();
}

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json triple_json(const NonlocalTriple& t) { return {{"a", t.a}, {"b", t.b}, {"c", t.c}}; }

std::string triple_str(const NonlocalTriple& t) {
  return "{" + num(t.a) + ", " + num(t.b) + ", " + num(t.c) + "}";
}

void require_seed(const Globals& g, const std::optional<std::uint64_t>& seed, const char* what) {
  if (g.strict && !seed) throw CLI::ValidationError(std::string("--seed is required for ") + what + " in --strict mode");
}

int cmd_analyze(const Globals& g, const std::string& spec, std::int64_t mc_samples,
                std::optional<std::uint64_t> seed, int shards, std::ostream& out) {
  const ToleranceConfig tol = g.tol();
  const Mat4 u = parse_gate_spec(spec);
  const Classification cls = classify(u, tol);
  const KAKResult k = kak(u, tol);
  const NonlocalTriple core = k.core.display_order();
  const double ep = entangling_power_closed(k.core);
  const MakhlinInvariants inv = makhlin_invariants(u, tol);
  std::optional<PPDecomposition> pp;
  if (cls.is_pp) pp = decompose_pp(u, tol);
  std::optional<MonteCarloEstimate> mc;
  if (mc_samples > 0) {
    require_seed(g, seed, "Monte Carlo sampling");
    mc = entangling_power_mc(u, mc_samples, seed.value_or(0), shards, tol);
  }

  if (g.json_out) {
    json j;
    j["format_version"] = kFormatVersion;
    j["gate"] = spec;
    j["is_unitary"] = cls.is_unitary;
    j["is_pp"] = cls.is_pp;
    j["is_matchgate"] = cls.is_matchgate;
    if (cls.det_ratio) j["det_ratio"] = cjson(*cls.det_ratio);
    if (pp) {
      const PPParams& p = pp->params;
      j["pp_params"] = {{"theta", p.theta}, {"alpha", p.alpha}, {"gamma", p.gamma}, {"phi", p.phi},
                        {"mu", p.mu},       {"nu", p.nu},       {"beta", p.beta}};
      j["pp_global_phase"] = pp->global_phase;
      j["pp_nonlocal"] = triple_json(nonlocal_from_pp(p));
    }
    j["nonlocal"] = triple_json(core);
    j["entangling_power"] = ep;
    if (mc) j["entangling_power_mc"] = {{"value", mc->value}, {"std_error", mc->std_error},
                                        {"samples", mc_samples}, {"seed", seed.value_or(0)}};
    j["makhlin"] = {{"g1", cjson(inv.g1)}, {"g2", inv.g2}};
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "gate:            " << spec << "\n";
  out << "parity preserving: " << (cls.is_pp ? "yes" : "no") << "\n";
  out << "matchgate:       " << (cls.is_matchgate ? "yes" : "no") << "\n";
  if (cls.det_ratio) out << "det A / det B:   " << num(*cls.det_ratio) << "\n";
  if (pp) {
    const PPParams& p = pp->params;
    out << "pp params:       theta=" << num(p.theta) << " alpha=" << num(p.alpha)
        << " gamma=" << num(p.gamma) << " phi=" << num(p.phi) << " mu=" << num(p.mu)
        << " nu=" << num(p.nu) << " beta=" << num(p.beta) << "\n";
    out << "global phase:    " << num(pp->global_phase) << "\n";
  }
  out << "nonlocal {a,b,c}: " << triple_str(core) << "\n";
  out << "entangling power: " << num(ep) << "\n";
  if (mc) {
    out << "entangling power (MC, " << mc_samples << " samples): " << num(mc->value) << " +/- "
        << num(mc->std_error) << "\n";
  }
  out << "makhlin G1:      " << num(inv.g1) << "\n";
  out << "makhlin G2:      " << num(inv.g2) << "\n";
  return kOk;
}

json report_json(const FidelityReport& r, double epsilon) {
  json j;
  j["fidelity"] = r.fidelity;
  j["leakage"] = r.leakage;
  j["exact"] = r.exact;
  if (r.exact) {
    j["phase"] = r.phase;
  } else {
    j["samples"] = r.samples;
  }
  if (r.logical_entangling_power) {
    j["logical_entangling_power"] = *r.logical_entangling_power;
    j["non_entangling"] = r.non_entangling;
  }
  j["epsilon"] = epsilon;
  j["pass"] = r.passes(epsilon);
  return j;
}

json provenance_json(const std::vector<ProvenanceEntry>& prov) {
  json a = json::array();
  for (const auto& p : prov) {
    a.push_back({{"logical_op", p.logical_op}, {"begin", p.begin}, {"end", p.end},
                 {"routing_swaps", p.routing_swaps}});
  }
  return a;
}

void print_report(const FidelityReport& r, double epsilon, std::ostream& out) {
  out << "fidelity:        " << num(r.fidelity) << (r.exact ? "" : " (sampled)") << "\n";
  out << "leakage:         " << num(r.leakage) << "\n";
  if (r.exact) out << "phase:           " << num(r.phase) << "\n";
  if (r.logical_entangling_power) {
    out << "logical e_p:     " << num(*r.logical_entangling_power)
        << (r.non_entangling ? " (non-entangling)" : "") << "\n";
  }
  out << "result:          " << (r.passes(epsilon) ? "PASS" : "FAIL") << " at epsilon " << num(epsilon)
      << "\n";
}

VerifyOptions verify_options(const Globals& g, const Circuit& physical, bool sampled,
                             std::size_t samples, std::optional<std::uint64_t> seed) {
  VerifyOptions vo;
  vo.tol = g.tol();
  vo.sampled = sampled || physical.num_qubits() > kExactVerifyCap;
  vo.samples = samples;
  if (vo.sampled) require_seed(g, seed, "sampled verification");
  vo.seed = seed.value_or(0);
  return vo;
}

int cmd_compile(const Globals& g, const std::string& input, const std::string& target_spec,
                double epsilon, const std::string& out_path, std::int64_t r_max, bool sampled,
                std::size_t samples, std::optional<std::uint64_t> seed, std::ostream& out) {
  const CircuitDocument logical = read_circuit(input);
  const Mat4 target = parse_gate_spec(target_spec);
  CompileOptions co;
  co.r_max = r_max;
  co.tol = g.tol();
  const CompiledCircuit cc = compile(logical.circuit, target, epsilon, co);

  const VerifyOptions vo = verify_options(g, cc.physical, sampled, samples, seed);
  const FidelityReport rep = verify(cc, logical.circuit, vo);

  const EntanglerPlan& p = cc.plan;
  json meta;
  meta["encoding"] = "pair";
  meta["logical_qubits"] = cc.encoding.logical_count;
  meta["epsilon"] = epsilon;
  meta["target"] = matrix_to_json(target);
  meta["strip"] = {{"core", triple_json(cc.strip.core)},
                   {"left", {cc.strip.tau1, cc.strip.tau2}},
                   {"right", {cc.strip.tau3, cc.strip.tau4}},
                   {"global_phase", cc.strip.global_phase}};
  meta["plan"] = {{"c_eff", p.c_eff},
                  {"repetitions", p.repetitions},
                  {"residual_error", p.residual_error},
                  {"mode", p.mode == EntanglerPlan::Mode::kRepeat ? "repeat" : "interleaved"}};
  meta["global_phase"] = cc.global_phase;
  meta["provenance"] = provenance_json(cc.provenance);
  meta["verification"] = report_json(rep, epsilon);
  const json doc = circuit_to_json(cc.physical, meta);

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << doc.dump(2) << "\n";
  }
  std::size_t targets = 0;
  for (const auto& op : cc.physical.ops()) targets += op.target_gate ? 1 : 0;

  if (g.json_out) {
    json s;
    s["format_version"] = kFormatVersion;
    s["physical_qubits"] = cc.physical.num_qubits();
    s["ops"] = cc.physical.size();
    s["target_gates"] = targets;
    s["plan"] = meta["plan"];
    s["verification"] = meta["verification"];
    if (out_path.empty()) s["circuit"] = doc;
    out << s.dump(2) << "\n";
  } else {
    out << "physical qubits: " << cc.physical.num_qubits() << "\n";
    out << "physical ops:    " << cc.physical.size() << " (" << targets << " target gates)\n";
    out << "core {a,b,c}:    " << triple_str(cc.strip.core) << "\n";
    out << "c_eff:           " << num(p.c_eff) << "\n";
    out << "CZ recipe:       " << p.repetitions << " blocks, "
        << (p.mode == EntanglerPlan::Mode::kRepeat ? "repeat" : "interleaved")
        << ", residual " << num(p.residual_error) << "\n";
    print_report(rep, epsilon, out);
    if (out_path.empty()) out << doc.dump(2) << "\n";
  }
  return rep.passes(epsilon) ? kOk : kVerificationFailed;
}

int cmd_simulate(const Globals& g, const std::string& input, const std::string& backend,
                 std::int64_t shots, std::optional<std::uint64_t> seed, std::ostream& out) {
  const ToleranceConfig tol = g.tol();
  const CircuitDocument doc = read_circuit(input);
  const Circuit& c = doc.circuit;
  const std::size_t n = c.num_qubits();
  if (shots > 0) require_seed(g, seed, "sampling");
  const std::uint64_t s = seed.value_or(0);

  std::vector<double> p1(n);
  std::map<std::string, std::int64_t> hist;
  std::optional<StateVector> sv;
  if (backend == "sv") {
    sv = run(c, 0, tol);
    for (std::size_t k = 0; k < n; ++k) p1[k] = (1 - sv->expectation_z(k)) / 2;
    if (shots > 0) {
      for (const auto& [idx, count] : sample(*sv, shots, s)) hist[basis_label(idx, n)] = count;
    }
  } else {
    const CovarianceState st = run_fermionic(c, 0, tol);
    for (std::size_t k = 0; k < n; ++k) p1[k] = (1 - st.expectation_z(k)) / 2;
    if (shots > 0) hist = sample_fermionic(st, shots, s);
  }

  if (g.json_out) {
    json j;
    j["format_version"] = kFormatVersion;
    j["backend"] = backend;
    j["qubits"] = n;
    j["p1"] = p1;
    if (shots > 0) {
      j["shots"] = shots;
      j["seed"] = s;
      j["histogram"] = hist;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "backend: " << backend << ", qubits: " << n << ", ops: " << c.size() << "\n";
  out << "P(qubit = 1):\n";
  for (std::size_t k = 0; k < n; ++k) out << "  q" << k << ": " << num(p1[k]) << "\n";
  if (sv && n <= 10) {
    out << "amplitudes:\n";
    const auto& a = sv->amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (std::abs(a(i)) > 1e-12) {
        out << "  |" << basis_label(static_cast<std::uint64_t>(i), n) << "> " << num(a(i)) << "\n";
      }
    }
  }
  if (shots > 0) {
    out << "histogram (" << shots << " shots, seed " << s << "):\n";
    for (const auto& [bits, count] : hist) out << "  " << bits << " " << count << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& logical_path, const std::string& physical_path,
               double epsilon, bool sampled, std::size_t samples, std::optional<std::uint64_t> seed,
               std::ostream& out) {
  const CircuitDocument logical = read_circuit(logical_path);
  const CircuitDocument physical = read_circuit(physical_path);
  const VerifyOptions vo = verify_options(g, physical.circuit, sampled, samples, seed);
  const FidelityReport rep = verify(physical.circuit, logical.circuit, vo);
  if (g.json_out) {
    json j = report_json(rep, epsilon);
    j["format_version"] = kFormatVersion;
    if (physical.metadata.is_object() && physical.metadata.contains("provenance")) {
      j["provenance"] = physical.metadata["provenance"];
    }
    out << j.dump(2) << "\n";
  } else {
    print_report(rep, epsilon, out);
  }
  return rep.passes(epsilon) ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matchgate analysis, simulation and encoded compilation", "matchlift"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_flag("--strict", g.strict, "Require explicit seeds for every sampling step");
  app.add_option("--tol-classify", g.tol_classify, "Classification tolerance");
  app.add_option("--tol-unitary", g.tol_unitary, "Unitarity tolerance");

  std::optional<std::uint64_t> seed;
  std::int64_t mc_samples = 0;
  int shards = 1;
  std::string gate_spec;
  auto* analyze = app.add_subcommand("analyze", "Classify and decompose a two-qubit gate");
  analyze->add_option("--gate", gate_spec, "Gate: name, NAME(args), JSON literal or @file")->required();
  analyze->add_option("--mc-samples", mc_samples, "Monte Carlo entangling power samples (0 = off)")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--shards", shards, "Monte Carlo shards")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", seed, "RNG seed");

  std::string input, target, out_path;
  double epsilon = 1e-6;
  std::int64_t r_max = kDefaultRMax;
  bool sampled = false;
  std::size_t samples = 32;
  auto* comp = app.add_subcommand("compile", "Compile a logical circuit with a target gate");
  comp->add_option("--input", input, "Logical circuit JSON")->required();
  comp->add_option("--target", target, "Target gate spec")->required();
  comp->add_option("--epsilon", epsilon, "Allowed infidelity")->check(CLI::PositiveNumber);
  comp->add_option("--out", out_path, "Write the compiled circuit here");
  comp->add_option("--r-max", r_max, "Maximum entangler blocks per CZ")->check(CLI::PositiveNumber);
  comp->add_flag("--sampled", sampled, "Verify on random encoded inputs");
  comp->add_option("--samples", samples, "Inputs for sampled verification")->check(CLI::PositiveNumber);
  comp->add_option("--seed", seed, "RNG seed for sampled verification");

  std::string backend = "sv";
  std::int64_t shots = 0;
  auto* sim = app.add_subcommand("simulate", "Simulate a circuit from |0...0>");
  sim->add_option("--input", input, "Circuit JSON")->required();
  sim->add_option("--backend", backend, "sv (statevector) or ff (free fermion)")
      ->check(CLI::IsMember({"sv", "ff"}));
  sim->add_option("--shots", shots, "Full-register samples (0 = none)")->check(CLI::NonNegativeNumber);
  sim->add_option("--seed", seed, "RNG seed");

  std::string logical_path, physical_path, encoding = "pair";
  double verify_eps = 1e-6;
  auto* ver = app.add_subcommand("verify", "Check a physical circuit against a logical one");
  ver->add_option("--logical", logical_path, "Logical circuit JSON")->required();
  ver->add_option("--physical", physical_path, "Physical circuit JSON")->required();
  ver->add_option("--encoding", encoding, "Logical encoding")->check(CLI::IsMember({"pair"}));
  ver->add_option("--epsilon", verify_eps, "Allowed infidelity")->check(CLI::PositiveNumber);
  ver->add_flag("--sampled", sampled, "Random encoded inputs instead of the full restriction");
  ver->add_option("--samples", samples, "Inputs for sampled mode")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "RNG seed for sampled mode");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(g, gate_spec, mc_samples, seed, shards, out);
    if (comp->parsed()) {
      return cmd_compile(g, input, target, epsilon, out_path, r_max, sampled, samples, seed, out);
    }
    if (sim->parsed()) return cmd_simulate(g, input, backend, shots, seed, out);
    if (ver->parsed()) return cmd_verify(g, logical_path, physical_path, verify_eps, sampled, samples, seed, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TargetIsMatchgate& e) {
    err << "error: " << e.what() << "\n";
    return kTargetIsMatchgate;
  } catch (const TargetNotPP& e) {
    err << "error: " << e.what() << "\n";
    return kTargetNotPP;
  } catch (const BackendRefusal& e) {
    err << "error: free-fermion backend refused " << e.what() << "\n";
    return kBackendRefusal;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const UnsupportedLogicalGate& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedLogicalGate;
  } catch (const SynthesisLimit& e) {
    err << "error: " << e.what() << "\n";
    return kSynthesisLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownGate& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadArity& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadTargets& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonUnitaryInput& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}

}  // namespace matchlift::cli
