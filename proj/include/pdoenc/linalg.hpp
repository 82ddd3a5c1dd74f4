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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace pdoenc {

using cplx = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Bit order: wire w is bit w of a flattened basis index, so a register
// |y_{p-1} ... y_0> placed at base wire b keeps y_j on wire b + j. When
// registers are stacked, the first (rightmost) register is least significant.

// Discretization: p qubits per dimension, d dimensions.
struct GridSpec {
  int p = 1;
  int d = 1;

  GridSpec() = default;
  GridSpec(int p_, int d_);

  std::int64_t P() const { return std::int64_t{1} << p; }
  std::int64_t N() const { return std::int64_t{1} << (p * d); }
  int wires() const { return p * d; }

  // Multi-index (k_1, ..., k_d) of a flattened grid index; k_1 sits in the
  // least significant register.
  std::vector<std::int64_t> unflatten(std::int64_t index) const;
  std::int64_t flatten(const std::vector<std::int64_t>& coords) const;
};

// Frequency folding: xi -> xi - P for xi >= P/2.
std::int64_t fold_frequency(std::int64_t xi, std::int64_t P);

// Standard Kronecker product; `a` acts on the high wires.
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);
DenseOperator dagger(const DenseOperator& a);
DenseOperator compose(const DenseOperator& a, const DenseOperator& b);

// Unitary DFT on N points, F[j][k] = N^{-1/2} exp(2 pi i jk / N).
DenseOperator dft_matrix(std::int64_t N);
// F^{(x)d} on a d-dimensional grid, matching the register layout above.
DenseOperator dft_matrix(const GridSpec& grid);

bool is_unitary(const DenseOperator& u, double tol = 1e-12);
double max_abs(const DenseOperator& a);
double spectral_norm(const DenseOperator& a);

}  // namespace pdoenc
