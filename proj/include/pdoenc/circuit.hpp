// Copyright 2026 The pdoenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pdoenc/linalg.hpp"

namespace pdoenc {

enum class GateKind {
  H,
  X,
  Z,
  S,
  Sdg,
  Ry,     // exp(-i angle Y / 2)
  Rz,     // diag(1, exp(i angle)), the phase-rotation convention
  ZExp,   // exp(i angle Z)
  Phase,  // scalar exp(i angle), applied only where the controls hold
  Swap,
  Oracle,   // target register ^= table[input register]
  Unitary,  // dense matrix on the target wires
};

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

struct Control {
  int wire = 0;
  bool on_one = true;  // false: open control, fires on |0>

  bool operator==(const Control&) const = default;
};

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  std::vector<Control> controls;
  std::vector<int> inputs;  // Oracle only
  double angle = 0.0;
  std::string label;
  std::shared_ptr<const std::vector<std::uint64_t>> table;  // Oracle only
  std::shared_ptr<const DenseOperator> matrix;              // Unitary only

  Gate inverse() const;
  // One- and two-qubit gates after expanding multi-controls; see circuit.cpp.
  std::int64_t elementary_cost() const;
  bool is_oracle_call() const { return kind == GateKind::Oracle || kind == GateKind::Unitary; }
  // 2x2 matrix of single-target kinds.
  Eigen::Matrix2cd matrix2() const;
};

// Gate constructors; controls can be attached afterwards.
Gate h_gate(int w);
Gate x_gate(int w);
Gate z_gate(int w);
Gate s_gate(int w);
Gate sdg_gate(int w);
Gate ry_gate(int w, double theta);
Gate rz_gate(int w, double theta);
Gate zexp_gate(int w, double phi);
Gate phase_gate(double phi);
Gate swap_gate(int a, int b);
Gate oracle_gate(std::string label, std::vector<int> inputs, std::vector<int> targets,
                 std::vector<std::uint64_t> table);
Gate unitary_gate(std::string label, std::vector<int> targets, DenseOperator matrix);
Gate with_controls(Gate g, std::vector<Control> controls);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int wire_count);

  int wire_count() const { return wire_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  cplx global_phase() const { return global_phase_; }

  void set_global_phase(cplx phase);
  void add(Gate g);
  // Appends `other` with its wire i relabeled to wire_map[i].
  void append(const Circuit& other, const std::vector<int>& wire_map);
  void append(const Circuit& other);
  // Appends `other` with every gate additionally conditioned on `controls`;
  // the global phase of `other` becomes a controlled Phase gate.
  void append_controlled(const Circuit& other, const std::vector<int>& wire_map,
                         const std::vector<Control>& controls);

  // Reversed gate list of inverses and conjugated global phase.
  Circuit inverse() const;
  Circuit widened(int wire_count) const;

  std::int64_t elementary_gate_count() const;
  std::int64_t oracle_call_count() const;
  std::int64_t count(GateKind kind, int min_controls = 0) const;

 private:
  void validate(const Gate& g) const;

  int wire_count_ = 0;
  std::vector<Gate> gates_;
  cplx global_phase_{1.0, 0.0};
};

}  // namespace pdoenc
