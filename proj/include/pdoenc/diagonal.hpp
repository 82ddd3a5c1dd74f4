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
#include <functional>
#include <vector>

#include "pdoenc/circuit.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc {

// Which integer labelling a p-wire register carries:
// Minus: (0, ..., P/2 - 1, -P/2, ..., -1), the folded frequencies.
// Plus:  (0, ..., P - 1).
enum class Branch { Minus, Plus };

std::vector<std::int64_t> branch_values(Branch sigma, int p);
std::int64_t branch_max_abs(Branch sigma, int p);

struct DiagonalSpec {
  Branch sigma = Branch::Plus;
  double theta = 0.0;
  int p = 1;

  // theta = pi / (3P).
  static DiagonalSpec with_default_theta(Branch sigma, int p);
  // Requires theta * max|v_sigma| < pi/2, which keeps arcsin(sin(theta v)) = theta v.
  void validate() const;
  // Half-width pi / (2 theta) of the interval reached by arcsin(x) / theta.
  double reach() const;
};

// exp(i theta D_sigma) as p single-wire Rz gates; any real theta.
Circuit rot_diag(Branch sigma, double theta, int p);
Circuit rot_diag(const DiagonalSpec& spec);

// Hermitian (1, 1)-encoding of sin(theta D_sigma): S, H, open-controlled
// R_sigma, controlled R_sigma^dag, H, X, S on the flag wire p. The gates
// multiply to i V with V Hermitian; the circuit records global phase -i so
// that circuit_unitary returns V itself.
BlockEncoding sin_diag_encoding(const DiagonalSpec& spec);

struct SignedAngleBits {
  bool negative = false;
  std::uint64_t fraction = 0;  // fraction / 2^width approximates arcsin(|g|/C) / pi
  int width = 0;

  double value() const;  // fraction / 2^width
  // Register image: fraction in the low `width` bits, sign bit on top.
  std::uint64_t packed() const;
};

SignedAngleBits theta_bits(double g, double C, int t);
int angle_bits_for(double C, double eps);  // ceil(log2(C pi / eps))

// (C, t+2, eps)-encoding of diag(values): a tabulated oracle writes the
// signed angle bits into a workspace register, a Z on the sign bit and a
// controlled Ry cascade rotate the flag, and the oracle uncomputes.
BlockEncoding arith_diag_encoding(const std::vector<double>& values, double C, double eps);
BlockEncoding arith_diag_encoding(const std::function<double(std::int64_t)>& g, int system_wires,
                                  double C, double eps);

// Real and imaginary parts encoded separately and joined by an LCU with
// coefficients (C_re, i C_im); scale C_re + C_im.
BlockEncoding complex_diag_encoding(const std::vector<cplx>& values, double c_re, double c_im,
                                    double eps);

}  // namespace pdoenc
