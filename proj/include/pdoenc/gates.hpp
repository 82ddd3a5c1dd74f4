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

// R_j = diag(1, exp(2 pi i / 2^j)) as an Rz gate.
Gate phase_rotation(int target, int j);

// Unitary DFT on p wires: H cascade with controlled R_j and final swaps.
Circuit qft_circuit(int p);
Circuit inverse_qft_circuit(int p);

// |x>|xi> -> exp(2 pi i x xi / P)|x>|xi> on 2p wires; xi occupies wires
// [0, p) and x occupies [p, 2p). Rotations with j + k >= p are trivial and
// omitted, leaving p(p+1)/2 controlled rotations.
Circuit phase_mult_circuit(int p);
// All-pairs variant that keeps the trivial rotations, for cross-checking.
Circuit phase_mult_circuit_naive(int p);
// d register pairs: xi = (xi_d ... xi_1) on [0, pd), x on [pd, 2pd).
Circuit phase_mult_multidim(int p, int d);

// Appends CR_phi: X on `signal` open-controlled on every wire of `flags`,
// exp(-i phi Z) on `signal`, then the same controlled X.
void append_cr_phi(Circuit& c, int signal, const std::vector<int>& flags, double phi);
// Two-wire CR_phi with the flag on wire 0 and the signal on wire 1.
Circuit cr_phi_gate(double phi);

struct ElementwiseProduct {
  Circuit circuit;
  double c = 0.0;                 // sqrt(sum |a_j b_j|^2)
  std::vector<int> output_wires;  // register holding sum a_j b_j |j> / c
  std::vector<int> postselect_wires;
};

// U_a on wires [0, n), U_b on [n, 2n), then CNOTs a_l -> b_l.
ElementwiseProduct elementwise_mult_circuit(const DenseOperator& ua, const DenseOperator& ub);

}  // namespace pdoenc
