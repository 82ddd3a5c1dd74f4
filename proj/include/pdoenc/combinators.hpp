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

#include "pdoenc/linalg.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc {

// State-preparation pair for an LCU over coefficients y with scale beta:
// first columns c_j = sqrt(|y_j| / beta), d_j = exp(i arg y_j) c_j.
struct PreparePair {
  DenseOperator ul;
  DenseOperator ur;
  std::vector<cplx> y;
  double beta = 0.0;
  int index_wires = 0;
};

PreparePair prepare_pair(const std::vector<cplx>& y, double beta);
PreparePair prepare_pair(const std::vector<cplx>& y);  // beta = |y|_1

// Completes a unit vector to a unitary whose first column it is.
DenseOperator complete_unitary(const Eigen::VectorXcd& first_column);

// (U_L^dag (x) I) W (U_R (x) I) with W selecting encodings[j] on index j.
// All encodings must share gamma; the result is a (gamma * beta)-encoding
// with error gamma * eps1 + beta * max eps_j, where eps1 is the measured
// first-column mismatch of the pair.
BlockEncoding lcu(const PreparePair& pair, const std::vector<BlockEncoding>& encodings);
// Same circuit with each encoding's gamma folded into its coefficient, so
// encodings of differing scale can be combined: gamma = sum |y_j| gamma_j.
BlockEncoding lcu_weighted(const std::vector<cplx>& y, const std::vector<BlockEncoding>& encodings);

// Block B1 B2 (be2 acts first).
BlockEncoding product(const BlockEncoding& be1, const BlockEncoding& be2);
// Block B_{k-1} (x) ... (x) B_0; encodings[0] acts on the lowest system wires.
BlockEncoding tensor_encodings(const std::vector<BlockEncoding>& encodings);
// Block F^{(x)d} B F^{dag (x)d} with F the unitary DFT on each p-wire register.
BlockEncoding conjugate_by_qft(const BlockEncoding& be, int d);

// An encoding whose block is exactly zero (one flag wire flipped to |1>).
BlockEncoding zero_encoding(int system_wires);

}  // namespace pdoenc
