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

#include <vector>

#include "pdoenc/circuit.hpp"
#include "pdoenc/linalg.hpp"

namespace pdoenc {

struct SimulationCaps {
  int dense_wires = 16;
  int state_wires = 24;
};

SimulationCaps& simulation_caps();

StateVector basis_state(int wires, std::int64_t index);

// In-place gate application; the global phase is not applied here.
void apply_gate(const Gate& g, StateVector& state);
StateVector apply_circuit(const Circuit& c, const StateVector& s);
DenseOperator circuit_unitary(const Circuit& c);

// Block encoding of A: with every non-input wire prepared in |0> and every
// non-output wire projected on <0|, the circuit acts as A / gamma.
//
// Canonical encodings use wires [0, n) for the system on both sides, and
// keep `workspace` clean ancillas at the top. Workspace wires are returned to
// |0> exactly on every input, so composite encodings may share them.
struct BlockEncoding {
  Circuit circuit;
  double gamma = 1.0;
  double epsilon = 0.0;
  bool hermitian = false;
  std::vector<int> input_wires;
  std::vector<int> output_wires;
  int workspace = 0;

  int system_wires() const { return static_cast<int>(input_wires.size()); }
  int ancilla_count() const { return circuit.wire_count() - system_wires(); }
  // Output-side ancillas: the wires projected on zero.
  std::vector<int> ancilla_wires() const;
  bool is_canonical() const;
};

BlockEncoding identity_encoding(int system_wires);

// Appends SWAPs so that output wires coincide with input wires, then
// relabels so that the system occupies [0, n). Workspace stays on top.
BlockEncoding canonicalize(const BlockEncoding& be);

DenseOperator extract_block(const BlockEncoding& be);
double success_probability(const BlockEncoding& be, const StateVector& input);
// Full post-selected (unnormalized) system output for a given input.
StateVector projected_output(const BlockEncoding& be, const StateVector& input);

}  // namespace pdoenc
