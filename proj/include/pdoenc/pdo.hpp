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
#include <string>
#include <variant>
#include <vector>

#include "pdoenc/chebyshev.hpp"
#include "pdoenc/linalg.hpp"

namespace pdoenc {

// Symbols a(x, xi) with x in [0, 1]^d and integer xi in [-P/2, P/2)^d.
using SymbolFunction = std::function<cplx(const std::vector<double>& x, const std::vector<std::int64_t>& xi)>;
using SpaceFunction = std::function<cplx(const std::vector<double>& x)>;
using FrequencyFunction = std::function<cplx(const std::vector<std::int64_t>& xi)>;

struct GenericSymbol {
  SymbolFunction a;
  double bound = 1.0;  // C_a >= sup |a|

  // Lookup symbol over a table of wrapped values indexed xi + N x on the
  // integer grid (xi unfolded, in [0, P)^d).
  static GenericSymbol from_table(const GridSpec& grid, std::vector<cplx> values, double bound);
};

struct SeparableSymbol {
  SpaceFunction alpha;
  FrequencyFunction beta;
  double alpha_bound = 1.0;
  double beta_bound = 1.0;
};

// One-dimensional factor of a fully separable symbol.
struct Factor {
  enum class Kind { Even, Odd, Exponential };
  Kind kind = Kind::Exponential;
  RealFunction g;       // Even / Odd payload
  double theta = 0.0;   // Exponential: exp(i theta y)
  double bound = 1.0;   // declared sup |g|

  static Factor even(RealFunction g, double bound);
  static Factor odd(RealFunction g, double bound);
  static Factor exponential(double theta);
  static Factor one() { return exponential(0.0); }

  bool is_one() const { return kind == Kind::Exponential && theta == 0.0; }
  cplx operator()(double y) const;
};

const char* to_string(Factor::Kind kind);

// alpha(x) = prod_k alpha[k](x_k), beta(xi) = prod_k beta[k](xi_k); entry k
// acts on the k-th (least significant first) register.
struct FullySeparableSymbol {
  std::vector<Factor> alpha;
  std::vector<Factor> beta;
};

using SimpleSymbol = std::variant<GenericSymbol, SeparableSymbol, FullySeparableSymbol>;

struct LinearCombination {
  std::vector<cplx> y;
  std::vector<SimpleSymbol> terms;
};

using SymbolSpec = std::variant<GenericSymbol, SeparableSymbol, FullySeparableSymbol, LinearCombination>;

cplx evaluate(const SimpleSymbol& s, const std::vector<double>& x, const std::vector<std::int64_t>& xi);
cplx evaluate(const SymbolSpec& s, const std::vector<double>& x, const std::vector<std::int64_t>& xi);

// Samples g(-y) against g(y) for Even/Odd factors on [-half_width, half_width].
void check_factor_parity(const Factor& f, double half_width);

// Symbol on the integer grid Xi x Xi: x -> x / P, xi folded.
struct WrappedSymbol {
  GridSpec grid;
  // Separable structure sum_j y_j alpha_j(x) beta_j(xi) when every term has it.
  std::vector<cplx> y;
  std::vector<std::vector<cplx>> alpha;
  std::vector<std::vector<cplx>> beta;
  // Dense table at xi + N x otherwise.
  std::vector<cplx> table;

  bool separable() const { return !alpha.empty(); }
  cplx operator()(std::int64_t x, std::int64_t xi) const;
  double sup_abs() const;
};

WrappedSymbol wrap_symbol(const SymbolSpec& s, const GridSpec& grid);

// f^(xi) = P^{-d} sum_x f(x) exp(-2 pi i x.xi / P) and its inverse.
std::vector<cplx> dft_coefficients(const std::vector<cplx>& f, const GridSpec& grid);
std::vector<cplx> inverse_dft_coefficients(const std::vector<cplx>& fhat, const GridSpec& grid);

// A[x, y] = P^{-d} sum_xi a(x, xi) exp(2 pi i (x - y).xi / P); P^d <= 2^12.
DenseOperator dense_pdo_matrix(const WrappedSymbol& w);
// Same operator applied by FFT, for separable structure only.
std::vector<cplx> apply_pdo_fft(const WrappedSymbol& w, const std::vector<cplx>& f);

// omega(x) = sum_j c_j exp(2 pi i q_j . x).
struct FourierMode {
  cplx c;
  std::vector<std::int64_t> q;
};

// Symbol of u - div(omega grad u) as 1 + 2rd fully separable terms.
LinearCombination elliptic_symbol(const std::vector<FourierMode>& omega, const GridSpec& grid);
// 1 + 4 pi^2 sum_j c_j e^{2 pi i q_j.x} (q_j.xi + |xi|^2), evaluated directly.
cplx elliptic_symbol_value(const std::vector<FourierMode>& omega, const std::vector<double>& x,
                           const std::vector<std::int64_t>& xi);
double elliptic_gamma(const std::vector<FourierMode>& omega, const GridSpec& grid);

// "x xi re im" per line over the grid.
std::string dump_symbol(const WrappedSymbol& w);

}  // namespace pdoenc
