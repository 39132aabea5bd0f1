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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchlift/gate_algebra.hpp"

namespace matchlift {

/// One gate application. `name` and `params` identify library gates for
/// serialization; custom matrices carry an empty params list and a name such
/// as "G" or "U".
struct Operation {
  std::string name;
  std::vector<double> params;
  std::vector<std::size_t> targets;
  GateMatrix matrix;
  /// Marks instances of the user-supplied non-matchgate in compiled output.
  bool target_gate = false;

  std::size_t arity() const { return targets.size(); }
  bool is_two_qubit() const { return targets.size() == 2; }
  /// |i − j| = 1 for two-qubit ops; always true for single-qubit ops.
  bool is_nearest_neighbor() const;

  static Operation single(std::string name, const Mat2& m, std::size_t q,
                          std::vector<double> params = {});
  static Operation pair(std::string name, const Mat4& m, std::size_t q0, std::size_t q1,
                        std::vector<double> params = {});
  /// Library gate by name; throws UnknownGate / BadArity / BadTargets.
  static Operation named(const std::string& name, std::vector<std::size_t> targets,
                         std::vector<double> params = {});
};

/// Ordered gate applications on a line of `num_qubits` qubits.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Operation>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  const Operation& operator[](std::size_t i) const { return ops_[i]; }

  /// Throws BadTargets if targets are out of range, repeated, or do not match
  /// the matrix dimension.
  Circuit& add(Operation op);
  Circuit& append(const Circuit& other);

  bool all_nearest_neighbor() const;

 private:
  std::size_t num_qubits_;
  std::vector<Operation> ops_;
};

}  // namespace matchlift
