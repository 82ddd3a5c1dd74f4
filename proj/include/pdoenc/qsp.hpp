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
#include <string>
#include <vector>

#include "pdoenc/chebyshev.hpp"
#include "pdoenc/diagonal.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc {

// Phases of the product e^{i phi_0 Z} prod_k W(x) e^{i phi_k Z} with
// W(x) = e^{i arccos(x) X}.
struct PhaseFactors {
  std::vector<double> phases;
  Parity parity = Parity::None;

  int degree() const { return static_cast<int>(phases.size()) - 1; }
  // One angle per line in radians, preceded by a "# parity" comment.
  std::string to_text() const;
  static PhaseFactors from_text(const std::string& text);
};

Eigen::Matrix2cd qsp_matrix(const PhaseFactors& phases, double x);
// Re of the top-left entry.
double qsp_real_part(const PhaseFactors& phases, double x);

struct PhaseSolverOptions {
  int degree_cap = 200;
  int max_iterations = 200;
  int restarts = 8;
  std::uint64_t seed = 7;
  double tolerance = 1e-8;  // accepted residual at degree+1 Chebyshev nodes
};

// Symmetric phase factors with Re p = target. The target must have definite
// parity, live on [-1, 1] and satisfy sup |target| <= 1.
PhaseFactors find_phases(const RealPolynomial& target, const PhaseSolverOptions& opts = {});

// The phases in the reflection convention used by the QET circuit, where
// the signal operator is [[x, s], [s, -x]]; the average over +r and -r
// reproduces Re p.
std::vector<double> reflection_phases(const PhaseFactors& phases);

// Hermitian U_A with block B: block of the result is Re p(B), gamma = 1.
// Layout: [system | flags of U_A | signal | workspace of U_A].
BlockEncoding qet_circuit(const BlockEncoding& ua, const PhaseFactors& phases);

// f(B) for the block B of a Hermitian U_A, via the even and odd parts of f on
// [-1, 1]. gamma = C_f for a single parity branch and 2 C_f otherwise.
BlockEncoding eigen_transform_encoding(const BlockEncoding& ua, const RealFunction& f, double c_f,
                                       double eps, int degree_cap = 500);

struct DiagFunctionOptions {
  // A ready approximation of g on [-pi/(2 theta), pi/(2 theta)]; fitted if empty.
  const RealPolynomial* u = nullptr;
  // Largest |v| where the encoding must be accurate; 0 means max |v_sigma|.
  double radius = 0.0;
  int degree_cap = 500;
};

struct DiagFunctionEncoding {
  BlockEncoding encoding;
  RealPolynomial composite;  // the QSP target
  PhaseFactors phases;
  double derivative_bound = 0.0;
  double composite_error = 0.0;  // measured sup |C_g g~(sin(theta v)) - g(v)|
};

// (C_g, 2, eps)-encoding of g(D_sigma) by QET on sin_diag_encoding. g must be
// even or odd and |g| <= C_g on [-pi/(2 theta), pi/(2 theta)].
DiagFunctionEncoding build_diag_function(const RealFunction& g, const DiagonalSpec& spec, double c_g,
                                         double eps, const DiagFunctionOptions& opts = {});
BlockEncoding diag_function_encoding(const RealFunction& g, const DiagonalSpec& spec, double c_g,
                                     double eps, const DiagFunctionOptions& opts = {});

}  // namespace pdoenc
