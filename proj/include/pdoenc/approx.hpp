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

#include <string>
#include <vector>

#include "pdoenc/chebyshev.hpp"

namespace pdoenc {

// Taylor truncation of arcsin(x) / theta: odd, nonnegative coefficients.
// Chooses the smallest order whose tail on |x| <= s is at most `tol`.
RealPolynomial arcsin_taylor(double theta, double s, double tol);
// Bound on the tail beyond the returned order (for reporting).
double arcsin_taylor_tail(int order, double theta, double s);

// sup |u'| over the domain of u, by dense sampling with a small margin.
double derivative_bound(const RealPolynomial& u);

// g~ = (1 - eps/(3 C_g)) u(v(x)) / C_g with v the arcsin truncation that is
// accurate on |x| <= sin(theta * radius). u must live on
// [-pi/(2 theta), pi/(2 theta)]. The composite is formed exactly at
// deg(u) deg(v) + 1 Chebyshev nodes and then its negligible tail is dropped.
RealPolynomial arcsin_compose(const RealPolynomial& u, double theta, double radius, double c_g,
                              double c_g_prime, double eps, int degree_cap = 500);

struct CompositeCheck {
  double max_error = 0.0;  // sup over |x| <= sin(theta radius) of |C_g g~(x) - g(arcsin(x)/theta)|
  double sup_norm = 0.0;   // sup over [-1, 1] of |g~|
};
CompositeCheck check_arcsin_composite(const RealPolynomial& composite, const RealFunction& g,
                                      double theta, double radius, double c_g, int samples = 4001);

// Even polynomial r with sup_{[0, b]} |exp(-a y^2) - r(y)| <= delta and |r| <= 1,
// on the domain [-b, b].
RealPolynomial gaussian_poly(double a, double b, double delta, int degree_cap = 500);

// Sum of weighted exponentials.
struct ExpSumApprox {
  enum class Kind { Decay, Gaussian };  // sum w e^{-a r}, or sum w e^{-a y^2}
  Kind kind = Kind::Decay;
  std::vector<double> weights;
  std::vector<double> exponents;
  double eps = 0.0;
  double range_lo = 0.0;
  double range_hi = 0.0;

  std::size_t size() const { return weights.size(); }
  double total_weight() const;    // W = sum |w_m|
  double max_exponent() const;    // R = max a_m
  double operator()(double arg) const;

  // One "m w_m a_m" line per term.
  std::string to_text() const;
  static ExpSumApprox from_text(const std::string& text, Kind kind);
};

// Trapezoid discretization of 1/r = int exp(-r e^t + t) dt, accurate to
// relative error eps on [delta, 1].
ExpSumApprox inverse_exp_sum(double delta, double eps);
// 1/(1 + y^2) ~ sum w_m exp(-a_m y^2) on |y| <= sqrt(d) P / 2.
ExpSumApprox inv_elliptic_terms(int d, double P, double eps);

}  // namespace pdoenc
