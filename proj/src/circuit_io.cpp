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

#include "matchlift/circuit_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "matchlift/errors.hpp"

namespace matchlift {

using nlohmann::json;

namespace {

class AngleParser {
 public:
  explicit AngleParser(const std::string& s) : s_(s) {}

  double parse() {
    double v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad angle \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        double d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  double primary() {
    skip_ws();
    if (eat('(')) {
      double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return kPi;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      return v;
    }
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

double parse_param(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_angle(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": parameter must be a number or an angle string");
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Mat4 as_mat4(const Eigen::MatrixXcd& m, const std::string& where) {
  if (m.rows() != 4 || m.cols() != 4) throw ParseError(where + ": expected a 4x4 matrix");
  return m;
}

Mat2 as_mat2(const Eigen::MatrixXcd& m, const std::string& where) {
  if (m.rows() != 2 || m.cols() != 2) throw ParseError(where + ": expected a 2x2 matrix");
  return m;
}

Mat4 blocks_from_json(const json& b, const std::string& where) {
  if (!b.is_object() || !b.contains("A") || !b.contains("B")) {
    throw ParseError(where + ": blocks must be an object with \"A\" and \"B\"");
  }
  Mat2 a = as_mat2(parse_matrix(b["A"], where + ".A"), where + ".A");
  Mat2 bb = as_mat2(parse_matrix(b["B"], where + ".B"), where + ".B");
  return assemble_pp(a, bb);
}

Mat4 gate_from_json(const json& j, const std::string& where) {
  if (j.is_array()) return as_mat4(parse_matrix(j, where), where);
  if (!j.is_object()) throw ParseError(where + ": expected a matrix, blocks or pp object");
  if (j.contains("matrix")) return as_mat4(parse_matrix(j["matrix"], where + ".matrix"), where + ".matrix");
  if (j.contains("blocks")) return blocks_from_json(j["blocks"], where + ".blocks");
  if (j.contains("pp")) {
    const json& p = j["pp"];
    if (!p.is_object()) throw ParseError(where + ".pp: expected an object");
    auto get = [&](const char* k) {
      return p.contains(k) ? parse_param(p[k], where + ".pp." + k) : 0.0;
    };
    return pp_from_angles(get("theta"), get("alpha"), get("gamma"), get("phi"), get("mu"), get("nu"),
                          get("beta"));
  }
  throw ParseError(where + ": expected \"matrix\", \"blocks\" or \"pp\"");
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what + ": invalid JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
}

// Splits "a, (b, c), d" on top-level commas.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

double parse_angle(const std::string& text) { return AngleParser(text).parse(); }

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError(where + ": complex entry must be a number or [re, im]");
}

Eigen::MatrixXcd parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw ParseError(where + "[0]: row must be an array");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(row_where + ": ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CircuitDocument parse_circuit(const json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  if (doc.contains("format_version")) {
    const json& v = doc["format_version"];
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
      throw ParseError("format_version: unsupported (expected " + std::to_string(kFormatVersion) + ")");
    }
  }
  if (!doc.contains("qubits") || !doc["qubits"].is_number_integer() || doc["qubits"].get<long long>() < 0) {
    throw ParseError("qubits: expected a non-negative integer");
  }
  CircuitDocument out;
  out.circuit = Circuit(doc["qubits"].get<std::size_t>());
  if (doc.contains("metadata")) out.metadata = doc["metadata"];

  const json gates = doc.contains("gates") ? doc["gates"] : json::array();
  if (!gates.is_array()) throw ParseError("gates: expected an array");
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const std::string where = "gates[" + std::to_string(k) + "]";
    const json& g = gates[k];
    if (!g.is_object()) throw ParseError(where + ": expected an object");
    if (!g.contains("name") || !g["name"].is_string()) throw ParseError(where + ".name: expected a string");
    const std::string name = g["name"].get<std::string>();
    if (!g.contains("targets") || !g["targets"].is_array()) {
      throw ParseError(where + ".targets: expected an array");
    }
    std::vector<std::size_t> targets;
    for (const auto& t : g["targets"]) {
      if (!t.is_number_integer() || t.get<long long>() < 0) {
        throw ParseError(where + ".targets: entries must be non-negative integers");
      }
      targets.push_back(t.get<std::size_t>());
    }
    std::vector<double> params;
    if (g.contains("params")) {
      if (!g["params"].is_array()) throw ParseError(where + ".params: expected an array");
      for (std::size_t p = 0; p < g["params"].size(); ++p) {
        params.push_back(parse_param(g["params"][p], where + ".params[" + std::to_string(p) + "]"));
      }
    }

    Operation op;
    try {
      if (g.contains("matrix")) {
        Eigen::MatrixXcd m = parse_matrix(g["matrix"], where + ".matrix");
        if (m.rows() == 2 && m.cols() == 2) {
          op = Operation::single(name, m, 0, params);
        } else if (m.rows() == 4 && m.cols() == 4) {
          op = Operation::pair(name, m, 0, 0, params);
        } else {
          throw ParseError(where + ".matrix: expected 2x2 or 4x4");
        }
        op.targets = targets;
      } else if (g.contains("blocks")) {
        op = Operation::pair(name, blocks_from_json(g["blocks"], where + ".blocks"), 0, 0, params);
        op.targets = targets;
      } else {
        op = Operation::named(name, targets, params);
      }
    } catch (const UnknownGate& e) {
      throw UnknownGate(where + ": " + e.what());
    } catch (const BadArity& e) {
      throw BadArity(where + ": " + e.what());
    } catch (const BadTargets& e) {
      throw BadTargets(where + ": " + e.what());
    }
    if (g.contains("target_gate")) op.target_gate = g["target_gate"].get<bool>();
    try {
      out.circuit.add(std::move(op));
    } catch (const BadTargets& e) {
      throw BadTargets(where + ": " + e.what());
    }
  }
  return out;
}

CircuitDocument parse_circuit_text(const std::string& text) {
  return parse_circuit(parse_json_text(text, "circuit"));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CircuitDocument read_circuit(const std::string& path) {
  try {
    return parse_circuit_text(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json circuit_to_json(const Circuit& c, const json& metadata) {
  json gates = json::array();
  for (const auto& op : c.ops()) {
    json g;
    g["name"] = op.name;
    g["targets"] = op.targets;
    bool library = false;
    const int want = static_cast<int>(op.targets.size());
    if (gate_qubits(op.name) == want && gate_arity(op.name) == static_cast<int>(op.params.size())) {
      const GateMatrix lib = gate_library(op.name, op.params);
      library = std::visit(
          [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            const auto* mine = std::get_if<M>(&op.matrix);
            return mine != nullptr && (*mine - m).cwiseAbs().maxCoeff() == 0.0;
          },
          lib);
    }
    if (library) {
      if (!op.params.empty()) g["params"] = op.params;
    } else if (const auto* m4 = std::get_if<Mat4>(&op.matrix);
               m4 != nullptr && op.name == "G" && off_block_mass(*m4) == 0.0) {
      auto [a, b] = pp_blocks(*m4);
      g["blocks"] = {{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}};
    } else {
      std::visit([&](const auto& m) { g["matrix"] = matrix_to_json(m); }, op.matrix);
      if (!op.params.empty()) g["params"] = op.params;
    }
    if (op.target_gate) g["target_gate"] = true;
    gates.push_back(std::move(g));
  }
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["qubits"] = c.num_qubits();
  doc["gates"] = std::move(gates);
  doc["metadata"] = metadata;
  return doc;
}

Mat4 parse_gate_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec.empty()) throw ParseError("empty gate spec");
  if (spec[0] == '@') return parse_gate_spec(read_text_file(spec.substr(1)));
  if (spec[0] == '[' || spec[0] == '{') return gate_from_json(parse_json_text(spec, "gate spec"), "gate");

  std::string name = spec;
  std::vector<double> params;
  if (auto open = spec.find('('); open != std::string::npos) {
    if (spec.back() != ')') throw ParseError("gate spec \"" + spec + "\": missing ')'");
    name = trim(spec.substr(0, open));
    for (const auto& arg : split_args(spec.substr(open + 1, spec.size() - open - 2))) {
      params.push_back(parse_angle(arg));
    }
  }
  if (gate_qubits(name) == 1) {
    throw BadArity("gate " + name + " acts on one qubit; a two-qubit gate is required");
  }
  return std::get<Mat4>(gate_library(name, params));
}

}  // namespace matchlift
