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


#include "pdoenc/approx.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pdoenc/errors.hpp"
#include "pdoenc/linalg.hpp"

namespace pdoenc {
namespace {

// Taylor coefficients of arcsin: x^{2k+1} carries (2k)! / (4^k (k!)^2 (2k+1)).
std::vector<double> arcsin_series(int terms) {
  std::vector<double> a(terms);
  double central = 1.0;  // binom(2k, k) / 4^k
  for (int k = 0; k < terms; ++k) {
    a[k] = central / (2 * k + 1);
    central *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
  }
  return a;
}

constexpr int kMaxArcsinOrder = 4000;

}  // namespace

double arcsin_taylor_tail(int order, double theta, double s) {
  // Coefficients decrease, so the tail is below a_{K+1} s^{2K+3} / (1 - s^2).
  const auto a = arcsin_series(order + 2);
  return a[order + 1] * std::pow(s, 2 * order + 3) / ((1.0 - s * s) * theta);
}

RealPolynomial arcsin_taylor(double theta, double s, double tol) {
  if (!(theta > 0.0)) throw ContractViolation("theta must be positive");
  if (!(s >= 0.0 && s < 1.0)) throw ContractViolation("arcsin truncation needs 0 <= s < 1");
  const auto a = arcsin_series(kMaxArcsinOrder + 2);
  int order = 0;
  for (;; ++order) {
    if (order >= kMaxArcsinOrder) throw ApproximationError("arcsin truncation order exceeds cap");
    const double tail = a[order + 1] * std::pow(s, 2 * order + 3) / ((1.0 - s * s) * theta);
    if (tail <= tol) break;
  }
  std::vector<double> mono(2 * order + 2, 0.0);
  for (int k = 0; k <= order; ++k) mono[2 * k + 1] = a[k] / theta;
  RealPolynomial v = RealPolynomial::from_monomial(mono);
  v.parity = Parity::Odd;
  return v;
}

double derivative_bound(const RealPolynomial& u) {
  const RealPolynomial du = u.derivative();
  const int samples = 20 * (u.degree() + 1) + 2001;
  return 1.01 * sampled_sup(du, u.lo, u.hi, samples);
}

RealPolynomial arcsin_compose(const RealPolynomial& u, double theta, double radius, double c_g,
                              double c_g_prime, double eps, int degree_cap) {
  if (!(eps > 0.0) || !(c_g > 0.0)) throw ContractViolation("arcsin_compose needs eps > 0 and C_g > 0");
  const double reach = kPi / (2.0 * theta);
  if (u.lo > -reach * (1.0 - 1e-9) || u.hi < reach * (1.0 - 1e-9))
    throw ContractViolation("u must be defined on [-pi/(2 theta), pi/(2 theta)]");
  if (!(theta * radius < kPi / 2)) throw ContractViolation("theta * radius must be below pi/2");
  const double s = std::sin(theta * radius);

  const double tol_v = c_g_prime > 0.0 ? eps / (3.0 * c_g_prime) : std::numeric_limits<double>::infinity();
  const RealPolynomial v = arcsin_taylor(theta, s, tol_v);
  // Nonnegative coefficients: v(1) is the largest value on [-1, 1].
  if (v(1.0) > reach * (1.0 + 1e-12)) throw ApproximationError("arcsin truncation leaves [-pi/(2 theta), pi/(2 theta)]");

  const int du = u.degree(), dv = v.degree();
  const int nodes = du * dv + 1;
  const auto x = chebyshev_nodes(nodes);
  std::vector<double> vals(nodes);
  for (int j = 0; j < nodes; ++j) vals[j] = u(v(x[j]));
  std::vector<double> c = chebyshev_coefficients(vals);
  const Parity parity = u.parity;
  if (parity != Parity::None) {
    const std::size_t skip = parity == Parity::Even ? 1 : 0;
    for (std::size_t k = skip; k < c.size(); k += 2) c[k] = 0.0;
  }
  // Drop the tail while its coefficient mass stays within eps/24; the
  // remaining budget covers the u and v errors and the final shrink.
  double dropped = 0.0;
  while (c.size() > 1 && dropped + std::abs(c.back()) <= eps / 24.0) {
    dropped += std::abs(c.back());
    c.pop_back();
  }
  RealPolynomial g = RealPolynomial::from_chebyshev(std::move(c));
  g.parity = parity;
  g = g.scaled((1.0 - eps / (3.0 * c_g)) / c_g);
  if (g.degree() > degree_cap)
    throw ApproximationError("composite degree " + std::to_string(g.degree()) + " exceeds cap " +
                             std::to_string(degree_cap));
  const double sup = sampled_sup(g, -1.0, 1.0, std::max(4001, 20 * g.degree() + 1));
  if (sup >= 1.0) throw ApproximationError("composite polynomial leaves the unit ball: sup = " + std::to_string(sup));
  return g;
}

CompositeCheck check_arcsin_composite(const RealPolynomial& composite, const RealFunction& g,
                                      double theta, double radius, double c_g, int samples) {
  CompositeCheck out;
  const double s = std::sin(theta * radius);
  const int n = std::max(samples, 20 * composite.degree() + 1);
  for (int k = 0; k < n; ++k) {
    const double x = -s + 2.0 * s * k / (n - 1);
    out.max_error = std::max(out.max_error, std::abs(c_g * composite(x) - g(std::asin(x) / theta)));
  }
  out.sup_norm = sampled_sup(composite, -1.0, 1.0, n);
  return out;
}

RealPolynomial gaussian_poly(double a, double b, double delta, int degree_cap) {
  if (!(a > 0.0) || !(b > 0.0) || !(delta > 0.0 && delta <= 1.0))
    throw ContractViolation("gaussian_poly needs a, b > 0 and 0 < delta <= 1");
  const RealPolynomial fit = cheb_fit([a](double y) { return std::exp(-a * y * y); }, -b, b, 0.5 * delta, degree_cap);
  return fit.with_parity(Parity::Even).scaled(1.0 - 0.5 * delta);
}

double ExpSumApprox::total_weight() const {
  double w = 0.0;
  for (double v : weights) w += std::abs(v);
  return w;
}

double ExpSumApprox::max_exponent() const {
  return exponents.empty() ? 0.0 : *std::max_element(exponents.begin(), exponents.end());
}

double ExpSumApprox::operator()(double arg) const {
  const double r = kind == Kind::Gaussian ? arg * arg : arg;
  double s = 0.0;
  for (std::size_t m = 0; m < weights.size(); ++m) s += weights[m] * std::exp(-exponents[m] * r);
  return s;
}

std::string ExpSumApprox::to_text() const {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t m = 0; m < weights.size(); ++m) os << m << ' ' << weights[m] << ' ' << exponents[m] << '\n';
  return os.str();
}

ExpSumApprox ExpSumApprox::from_text(const std::string& text, Kind kind) {
  ExpSumApprox out;
  out.kind = kind;
  std::istringstream is(text);
  std::size_t m;
  double w, a;
  while (is >> m >> w >> a) {
    if (m != out.weights.size()) throw ContractViolation("exponential-sum lines out of order");
    out.weights.push_back(w);
    out.exponents.push_back(a);
  }
  if (!is.eof()) throw ContractViolation("malformed exponential-sum text");
  return out;
}

ExpSumApprox inverse_exp_sum(double delta, double eps) {
  if (!(delta > 0.0 && delta <= 1.0) || !(eps > 0.0 && eps <= 0.5))
    throw ContractViolation("inverse_exp_sum needs 0 < delta <= 1 and 0 < eps <= 1/2");
  const double L = std::log(4.0 / eps);
  const double a = -L;
  const double b = std::log(4.0 * L / delta * std::log(2.0 * L / (delta * eps)));
  const double h_max = kPi / (2.0 * L + 1.0);
  const int steps = static_cast<int>(std::ceil((b - a) / h_max));
  const double h = (b - a) / steps;

  ExpSumApprox out;
  out.kind = ExpSumApprox::Kind::Decay;
  out.eps = eps;
  out.range_lo = delta;
  out.range_hi = 1.0;
  for (int m = 0; m <= steps; ++m) {
    const double t = a + m * h;
    const double end = (m == 0 || m == steps) ? 0.5 : 1.0;
    out.weights.push_back(end * h * std::exp(t));
    out.exponents.push_back(std::exp(t));
  }

  double worst = 0.0;
  const int samples = 10000;
  for (int k = 0; k < samples; ++k) {
    const double r = delta * std::pow(1.0 / delta, static_cast<double>(k) / (samples - 1));
    worst = std::max(worst, std::abs(1.0 - r * out(r)));
  }
  if (worst > eps) throw ApproximationError("exponential sum misses its relative tolerance");
  return out;
}

ExpSumApprox inv_elliptic_terms(int d, double P, double eps) {
  if (d < 1 || !(P >= 1.0)) throw ContractViolation("inv_elliptic_terms needs d >= 1 and P >= 1");
  const double shift = d * P * P / 4.0 + 1.0;
  const ExpSumApprox base = inverse_exp_sum(1.0 / shift, eps);
  ExpSumApprox out;
  out.kind = ExpSumApprox::Kind::Gaussian;
  out.eps = eps;
  out.range_hi = std::sqrt(static_cast<double>(d)) * P / 2.0;
  out.range_lo = -out.range_hi;
  for (std::size_t m = 0; m < base.size(); ++m) {
    const double am = base.exponents[m] / shift;
    out.exponents.push_back(am);
    out.weights.push_back(std::exp(-am) * base.weights[m] / shift);
  }
  double worst = 0.0;
  const int samples = 10000;
  for (int k = 0; k < samples; ++k) {
    const double y = out.range_lo + (out.range_hi - out.range_lo) * k / (samples - 1);
    worst = std::max(worst, std::abs(1.0 / (1.0 + y * y) - out(y)));
  }
  if (worst > eps) throw ApproximationError("Gaussian sum misses its tolerance");
  return out;
}

}  // namespace pdoenc
