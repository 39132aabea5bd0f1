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

// JSON circuit documents.
//
//   {
//     "format_version": 1,
//     "qubits": 2,
//     "gates": [
//       {"name": "H", "targets": [0]},
//       {"name": "RZ", "targets": [1], "params": ["pi/4"]},
//       {"name": "U", "targets": [0, 1], "matrix": [[[1, 0], [0, 0], ...], ...]},
//       {"name": "G", "targets": [1, 2], "blocks": {"A": [[...]], "B": [[...]]}}
//     ],
//     "metadata": {}
//   }
//
// Complex entries are [re, im] pairs (a bare number is real). Angles are
// numbers or strings over pi, e.g. "pi/4", "-3*pi/8".

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "matchlift/circuit.hpp"

namespace matchlift {

inline constexpr int kFormatVersion = 1;

struct CircuitDocument {
  Circuit circuit;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Arithmetic over numbers and `pi` with + − * / and parentheses.
/// Throws ParseError.
double parse_angle(const std::string& text);

/// Complex from a number or an [re, im] pair. Throws ParseError.
Complex parse_complex(const nlohmann::json& j, const std::string& where);
Eigen::MatrixXcd parse_matrix(const nlohmann::json& j, const std::string& where);
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

/// Throws ParseError (with the offending field path), UnknownGate, BadArity,
/// BadTargets.
CircuitDocument parse_circuit(const nlohmann::json& doc);
/// Parses text; JSON syntax errors report line and column.
CircuitDocument parse_circuit_text(const std::string& text);
CircuitDocument read_circuit(const std::string& path);

nlohmann::json circuit_to_json(const Circuit& c,
                               const nlohmann::json& metadata = nlohmann::json::object());

/// Two-qubit gate from a command-line spec:
///   SWAP, NL(0.3,0.1,0), TSWAP(pi/4), PP(θ,α,γ,φ,μ,ν,β)   library gate
///   [[...], ...]                                           4×4 matrix literal
///   {"matrix": ...} | {"blocks": {"A":..., "B":...}} | {"pp": {...}}
///   @path                                                  any of the above from a file
/// Throws ParseError, UnknownGate, BadArity.
Mat4 parse_gate_spec(const std::string& spec);

std::string read_text_file(const std::string& path);

}  // namespace matchlift
