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

#include <filesystem>
#include <fstream>

#include "matchlift/circuit_io.hpp"
#include "matchlift/compiler.hpp"
#include "matchlift/errors.hpp"
#include "test_support.hpp"

namespace matchlift {
namespace {

using namespace testing;
using nlohmann::json;

TEST(Angle, Expressions) {
  EXPECT_DOUBLE_EQ(parse_angle("pi/4"), kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("-3*pi/8"), -3 * kPi / 8);
  EXPECT_DOUBLE_EQ(parse_angle(" 0.25 "), 0.25);
  EXPECT_DOUBLE_EQ(parse_angle("1e-3"), 1e-3);
  EXPECT_DOUBLE_EQ(parse_angle("(pi + 1) / 2"), (kPi + 1) / 2);
  EXPECT_DOUBLE_EQ(parse_angle("2*-pi"), -2 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi - pi/2 - pi/4"), kPi / 4);
}

TEST(Angle, Errors) {
  for (const char* bad : {"", "pi/", "2 pi", "foo", "(pi", "1/0", "nan", "pi)"}) {
    EXPECT_THROW(parse_angle(bad), ParseError) << bad;
  }
}

TEST(Document, ParsesGateForms) {
  const json doc = json::parse(R"({
    "format_version": 1,
    "qubits": 3,
    "gates": [
      {"name": "H", "targets": [0]},
      {"name": "rz", "targets": [1], "params": ["pi/4"]},
      {"name": "NL", "targets": [1, 2], "params": [0.3, "pi/8", 0]},
      {"name": "G", "targets": [0, 1], "blocks": {"A": [[1, 0], [0, 1]], "B": [[0, 1], [1, 0]]}},
      {"name": "U", "targets": [2, 1], "matrix": [[[0, 1], 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}
    ],
    "metadata": {"note": "x"}
  })");
  const CircuitDocument d = parse_circuit(doc);
  ASSERT_EQ(d.circuit.size(), 5U);
  EXPECT_EQ(d.metadata["note"], "x");
  EXPECT_LT(max_abs(std::get<Mat2>(d.circuit[1].matrix) - gates::rz(kPi / 4)), 1e-15);
  EXPECT_LT(max_abs(std::get<Mat4>(d.circuit[2].matrix) - nl_oracle(0.3, kPi / 8, 0)), 1e-12);
  EXPECT_LT(max_abs(std::get<Mat4>(d.circuit[3].matrix) - gates::swap()), 1e-15);
  EXPECT_EQ(std::get<Mat4>(d.circuit[4].matrix)(0, 0), Complex(0, 1));
  EXPECT_EQ(d.circuit[4].targets, (std::vector<std::size_t>{2, 1}));
}

TEST(Document, ErrorsNameTheField) {
  auto msg = [](const std::string& text) -> std::string {
    try {
      parse_circuit_text(text);
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(msg(R"({"qubits": 2, "gates": [{"name": "H", "targets": [0]}, {"name": "BOGUS", "targets": [0]}]})")
                .find("gates[1]"),
            std::string::npos);
  EXPECT_NE(msg(R"({"qubits": 2, "gates": [{"name": "RZ", "targets": [0], "params": ["pi/"]}]})")
                .find("gates[0].params[0]"),
            std::string::npos);
  EXPECT_NE(msg("{\"qubits\": 2,\n \"gates\": [\n  {\"name\": }\n]}").find("line 3"), std::string::npos);
  EXPECT_THROW(parse_circuit_text(R"({"qubits": 2, "gates": [{"name": "BOGUS", "targets": [0]}]})"), UnknownGate);
  EXPECT_THROW(parse_circuit_text(R"({"qubits": 2, "gates": [{"name": "CZ", "targets": [0, 5]}]})"), BadTargets);
  EXPECT_THROW(parse_circuit_text(R"({"qubits": 2, "gates": [{"name": "CZ", "targets": [0]}]})"), BadTargets);
  EXPECT_THROW(parse_circuit_text(R"({"qubits": 2, "gates": [{"name": "RX", "targets": [0]}]})"), BadArity);
  EXPECT_THROW(parse_circuit_text(R"({"format_version": 9, "qubits": 2})"), ParseError);
  EXPECT_THROW(parse_circuit_text(R"({"gates": []})"), ParseError);
  EXPECT_THROW(parse_circuit_text(R"({"qubits": 1, "gates": [{"name": "U", "targets": [0], "matrix": [[1, 0], [0]]}]})"),
               ParseError);
}

TEST(Document, RoundTripIsExact) {
  Rng rng(71);
  Circuit c(4);
  c.add(Operation::named("RZ", {0}, {0.123456789}));
  c.add(Operation::named("TSWAP", {1, 2}, {kPi / 3}));
  c.add(Operation::pair("G", build_pp(haar2(rng), haar2(rng)), 2, 3));
  Operation t = Operation::pair("TARGET", haar4(rng), 1, 0);
  t.target_gate = true;
  c.add(t);
  c.add(Operation::single("U", haar2(rng), 3));
  const json j = circuit_to_json(c, {{"k", 1}});
  const CircuitDocument back = parse_circuit_text(j.dump());
  ASSERT_EQ(back.circuit.size(), c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_EQ(back.circuit[k].name, c[k].name);
    EXPECT_EQ(back.circuit[k].targets, c[k].targets);
    EXPECT_EQ(back.circuit[k].target_gate, c[k].target_gate);
    std::visit([&](const auto& m) {
      using M = std::decay_t<decltype(m)>;
      EXPECT_EQ((std::get<M>(back.circuit[k].matrix) - m).cwiseAbs().maxCoeff(), 0.0);
    }, c[k].matrix);
  }
  EXPECT_EQ(circuit_to_json(back.circuit, back.metadata).dump(), j.dump());
  EXPECT_EQ(j["gates"][0]["name"], "RZ");
  EXPECT_TRUE(j["gates"][2].contains("blocks"));
  EXPECT_TRUE(j["gates"][3].contains("matrix"));
}

TEST(Document, CompiledCircuitRoundTripsAndReverifies) {
  Circuit logical(2);
  logical.add(Operation::named("H", {0}));
  logical.add(Operation::named("CNOT", {0, 1}));
  const CompiledCircuit cc = compile(logical, gates::tau_swap(0.2), 1e-6);
  const CircuitDocument back = parse_circuit_text(circuit_to_json(cc.physical).dump());
  EXPECT_GE(verify(back.circuit, logical).fidelity, 1 - 1e-6);
}

TEST(GateSpec, Forms) {
  EXPECT_LT(max_abs(parse_gate_spec("SWAP") - gates::swap()), 1e-15);
  EXPECT_LT(max_abs(parse_gate_spec(" NL(0.3, 0.1, 0) ") - nl_oracle(0.3, 0.1, 0)), 1e-12);
  EXPECT_LT(max_abs(parse_gate_spec("tswap(pi/4)") - gates::tau_swap(kPi / 4)), 1e-15);
  EXPECT_LT(max_abs(parse_gate_spec(R"({"blocks": {"A": [[1,0],[0,1]], "B": [[0,1],[1,0]]}})") - gates::swap()), 1e-15);
  EXPECT_LT(max_abs(parse_gate_spec(R"({"pp": {"theta": 0, "phi": "pi/2", "beta": "pi/4"}})") -
                    nl_oracle(kPi / 4, kPi / 4, kPi / 4)),
            1e-12);
  EXPECT_LT(max_abs(parse_gate_spec(matrix_to_json(gates::cz()).dump()) - gates::cz()), 1e-15);
  EXPECT_THROW(parse_gate_spec("H"), BadArity);
  EXPECT_THROW(parse_gate_spec("NL(1,2)"), BadArity);
  EXPECT_THROW(parse_gate_spec("WHAT"), UnknownGate);
  EXPECT_THROW(parse_gate_spec("NL(1,2,3"), ParseError);
  EXPECT_THROW(parse_gate_spec("[[1,0],[0,1]]"), ParseError);
}

TEST(GateSpec, FromFile) {
  const auto path = std::filesystem::temp_directory_path() / "matchlift_gate_spec.json";
  {
    std::ofstream f(path);
    f << matrix_to_json(gates::fswap()).dump();
  }
  EXPECT_EQ((parse_gate_spec("@" + path.string()) - gates::fswap()).cwiseAbs().maxCoeff(), 0.0);
  std::filesystem::remove(path);
  EXPECT_THROW(parse_gate_spec("@/nonexistent/x.json"), ParseError);
}

}  // namespace
}  // namespace matchlift
