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

#include <functional>
#include <vector>

namespace pdoenc {

enum class Parity { Even, Odd, None };

const char* to_string(Parity parity);

// Real polynomial stored as a Chebyshev series in the variable mapped from
// [lo, hi] onto [-1, 1].
struct RealPolynomial {
  std::vector<double> coeffs{0.0};
  double lo = -1.0;
  double hi = 1.0;
  Parity parity = Parity::None;

  int degree() const;
  double operator()(double y) const;
  RealPolynomial derivative() const;
  RealPolynomial scaled(double factor) const;
  // Zeroes coefficients of the wrong parity; needs a symmetric domain.
  RealPolynomial with_parity(Parity p) const;
  bool parity_consistent(double tol = 0.0) const;

  // Monomial coefficients c_k of y^k on [-1, 1].
  static RealPolynomial from_monomial(const std::vector<double>& c);
  static RealPolynomial from_chebyshev(std::vector<double> c, double lo = -1.0, double hi = 1.0);
  std::vector<double> monomial() const;  // only for domain [-1, 1]
};

// Chebyshev nodes of the first kind on [-1, 1], x_j = cos(pi (j + 1/2) / n).
std::vector<double> chebyshev_nodes(int n);
// Chebyshev coefficients of the degree n-1 interpolant through values at
// chebyshev_nodes(n) (a type-II DCT).
std::vector<double> chebyshev_coefficients(const std::vector<double>& values);

using RealFunction = std::function<double(double)>;

Parity detect_parity(const RealFunction& g, double half_width, int samples = 257);
double sampled_sup_error(const RealPolynomial& poly, const RealFunction& g, double lo, double hi,
                         int samples);
double sampled_sup(const RealPolynomial& poly, double lo, double hi, int samples);

// Minimal-degree Chebyshev truncation of g on [lo, hi] whose sup error on a
// grid of max(2000, 10 (deg+1)) points is at most delta.
RealPolynomial cheb_fit(const RealFunction& g, double lo, double hi, double delta, int degree_cap = 500);

}  // namespace pdoenc
