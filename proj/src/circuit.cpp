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

#include "matchlift/circuit.hpp"

#include <algorithm>
#include <utility>

#include "matchlift/errors.hpp"

namespace matchlift {

bool Operation::is_nearest_neighbor() const {
  if (targets.size() != 2) return true;
  auto [lo, hi] = std::minmax(targets[0], targets[1]);
  return hi - lo == 1;
}

Operation Operation::single(std::string name, const Mat2& m, std::size_t q,
                            std::vector<double> params) {
  return {std::move(name), std::move(params), {q}, m, false};
}

Operation Operation::pair(std::string name, const Mat4& m, std::size_t q0, std::size_t q1,
                          std::vector<double> params) {
  return {std::move(name), std::move(params), {q0, q1}, m, false};
}

Operation Operation::named(const std::string& name, std::vector<std::size_t> targets,
                           std::vector<double> params) {
  GateMatrix m = gate_library(name, params);
  std::size_t want = std::holds_alternative<Mat2>(m) ? 1 : 2;
  if (targets.size() != want) {
    throw BadTargets("gate " + name + " needs " + std::to_string(want) + " target(s)");
  }
  return {name, std::move(params), std::move(targets), std::move(m), false};
}

Circuit& Circuit::add(Operation op) {
  std::size_t want = std::holds_alternative<Mat2>(op.matrix) ? 1 : 2;
  if (op.targets.size() != want) {
    throw BadTargets("operation '" + op.name + "' has " + std::to_string(op.targets.size()) +
                     " target(s) for a " + std::to_string(want) + "-qubit matrix");
  }
  for (std::size_t t : op.targets) {
    if (t >= num_qubits_) {
      throw BadTargets("target " + std::to_string(t) + " out of range for " +
                       std::to_string(num_qubits_) + " qubits");
    }
  }
  if (want == 2 && op.targets[0] == op.targets[1]) {
    throw BadTargets("two-qubit operation '" + op.name + "' has repeated target");
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) throw BadTargets("append: qubit count mismatch");
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

bool Circuit::all_nearest_neighbor() const {
  return std::all_of(ops_.begin(), ops_.end(),
                     [](const Operation& op) { return op.is_nearest_neighbor(); });
}

}  // namespace matchlift
