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
#include <vector>

#include "pdoenc/approx.hpp"
#include "pdoenc/diagonal.hpp"
#include "pdoenc/pdo.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc {

// Phase-space lift: iQFT on the input, H on a fresh x register, the phase
// multiplication, a diagonal encoding of the wrapped symbol at eps/sqrt(P^d)
// and H on the frequency register. gamma = 2^{pd/2} C_a (C_re + C_im for
// complex symbols).
BlockEncoding generic_pdo_encoding(const GenericSymbol& s, const GridSpec& grid, double eps);
BlockEncoding generic_pdo_encoding(const WrappedSymbol& w, double bound, double eps);

// diag(alpha) F diag(beta) F^dag with arithmetic diagonal encodings.
BlockEncoding separable_pdo_encoding(const SeparableSymbol& s, const GridSpec& grid, double eps);

// Per-dimension encodings: exponential factors exactly by phase rotations,
// even and odd factors by QET at eps / (2 d C). gamma = C, the product of the
// per-factor constants (raised where a factor exceeds its declared bound on
// the interval the arcsin composition reaches).
BlockEncoding fully_separable_pdo_encoding(const FullySeparableSymbol& s, const GridSpec& grid, double eps);

// LCU over per-term encodings; gamma = sum |y_j| gamma_j and the claimed
// error is (1 + gamma) eps.
BlockEncoding lcu_pdo_encoding(const LinearCombination& s, const GridSpec& grid, double eps);

BlockEncoding encode_symbol(const SymbolSpec& s, const GridSpec& grid, double eps);

BlockEncoding elliptic_encoding(const std::vector<FourierMode>& omega, const GridSpec& grid, double eps);

struct RadialInverse {
  BlockEncoding encoding;  // epsilon: distance to the exponential-sum multiplier
  ExpSumApprox terms;
  std::vector<bool> kept;
  double dropped_weight = 0.0;
};

// (1 + |xi|^2)^{-1} as an LCU of Gaussian multipliers.
RadialInverse build_radial_inverse(const GridSpec& grid, double eps, int degree_cap = 500);
BlockEncoding radial_multiplier_inverse_encoding(const GridSpec& grid, double eps);

// Theta used for even/odd factors on each branch.
double factor_theta(Branch sigma, int p);

struct EncodingReport {
  double gamma = 0.0;
  int ancillas = 0;
  double claimed_error = 0.0;
  double defect_spectral = 0.0;
  double defect_max = 0.0;
  std::int64_t elementary_gates = 0;
  std::int64_t oracle_calls = 0;
  double success_probability = 0.0;  // on the normalized all-ones input
  bool within_bound = false;
};

EncodingReport verify_encoding(const BlockEncoding& be, const DenseOperator& reference);
EncodingReport verify_encoding(const BlockEncoding& be, const DenseOperator& reference, double bound);

}  // namespace pdoenc
