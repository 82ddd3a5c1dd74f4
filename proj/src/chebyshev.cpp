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


#include "pdoenc/chebyshev.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

#include "fftw_lock.hpp"
#include "pdoenc/errors.hpp"
#include "pdoenc/linalg.hpp"

namespace pdoenc {
namespace {

double to_unit(double y, double lo, double hi) { return (2.0 * y - (lo + hi)) / (hi - lo); }

}  // namespace

const char* to_string(Parity parity) {
  switch (parity) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    default:
      return "none";
  }
}

int RealPolynomial::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k > 0; --k)
    if (coeffs[k] != 0.0) return k;
  return 0;
}

double RealPolynomial::operator()(double y) const {
  const double x = to_unit(y, lo, hi);
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
    const double b0 = 2.0 * x * b1 - b2 + coeffs[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coeffs[0];
}

RealPolynomial RealPolynomial::derivative() const {
  const int n = degree();
  RealPolynomial d;
  d.lo = lo;
  d.hi = hi;
  if (n == 0) return d;
  std::vector<double> c(n + 1, 0.0);
  for (int k = n; k >= 1; --k) c[k - 1] = (k + 1 <= n ? c[k + 1] : 0.0) + 2.0 * k * coeffs[k];
  c[0] *= 0.5;
  c.resize(n);
  const double scale = 2.0 / (hi - lo);
  for (double& v : c) v *= scale;
  d.coeffs = std::move(c);
  if (parity == Parity::Even) d.parity = Parity::Odd;
  if (parity == Parity::Odd) d.parity = Parity::Even;
  return d;
}

RealPolynomial RealPolynomial::scaled(double factor) const {
  RealPolynomial out = *this;
  for (double& v : out.coeffs) v *= factor;
  return out;
}

RealPolynomial RealPolynomial::with_parity(Parity p) const {
  if (p != Parity::None && std::abs(lo + hi) > 1e-12 * (hi - lo))
    throw ContractViolation("parity needs a symmetric domain");
  RealPolynomial out = *this;
  out.parity = p;
  if (p == Parity::None) return out;
  const std::size_t skip = p == Parity::Even ? 1 : 0;
  for (std::size_t k = skip; k < out.coeffs.size(); k += 2) out.coeffs[k] = 0.0;
  return out;
}

bool RealPolynomial::parity_consistent(double tol) const {
  if (parity == Parity::None) return true;
  const std::size_t skip = parity == Parity::Even ? 1 : 0;
  for (std::size_t k = skip; k < coeffs.size(); k += 2)
    if (std::abs(coeffs[k]) > tol) return false;
  return true;
}

RealPolynomial RealPolynomial::from_chebyshev(std::vector<double> c, double lo, double hi) {
  RealPolynomial out;
  out.coeffs = c.empty() ? std::vector<double>{0.0} : std::move(c);
  out.lo = lo;
  out.hi = hi;
  if (lo == -hi) {
    bool even = true, odd = true;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k)
      if (out.coeffs[k] != 0.0) (k % 2 ? even : odd) = false;
    out.parity = even ? Parity::Even : odd ? Parity::Odd : Parity::None;
  }
  return out;
}

RealPolynomial RealPolynomial::from_monomial(const std::vector<double>& m) {
  const int n = std::max<int>(1, static_cast<int>(m.size()));
  std::vector<double> out(n, 0.0);
  std::vector<double> power{1.0};  // Chebyshev coefficients of y^k
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += m[k] * power[j];
    std::vector<double> next(power.size() + 1, 0.0);
    for (std::size_t j = 0; j < power.size(); ++j) {
      // y T_j = (T_{j+1} + T_{|j-1|}) / 2, with y T_0 = T_1.
      if (j == 0) {
        next[1] += power[0];
      } else {
        next[j + 1] += 0.5 * power[j];
        next[j - 1] += 0.5 * power[j];
      }
    }
    power = std::move(next);
  }
  // Monomials of one parity give Chebyshev terms of that parity only.
  bool even = true, odd = true;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0.0) continue;
    (k % 2 ? even : odd) = false;
  }
  const Parity parity = even ? Parity::Even : odd ? Parity::Odd : Parity::None;
  RealPolynomial p = from_chebyshev(std::move(out));
  return parity == Parity::None ? p : p.with_parity(parity);
}

std::vector<double> RealPolynomial::monomial() const {
  const int n = degree();
  std::vector<double> out(n + 1, 0.0);
  std::vector<double> tprev{1.0}, tcur{0.0, 1.0};  // T_0, T_1 in monomials
  for (int k = 0; k <= n; ++k) {
    const std::vector<double>& t = k == 0 ? tprev : tcur;
    for (std::size_t j = 0; j < t.size(); ++j) out[j] += coeffs[k] * t[j];
    if (k >= 1) {
      std::vector<double> next(tcur.size() + 1, 0.0);
      for (std::size_t j = 0; j < tcur.size(); ++j) next[j + 1] += 2.0 * tcur[j];
      for (std::size_t j = 0; j < tprev.size(); ++j) next[j] -= tprev[j];
      tprev = std::move(tcur);
      tcur = std::move(next);
    }
  }
  return out;
}

std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = std::cos(kPi * (j + 0.5) / n);
  return x;
}

std::vector<double> chebyshev_coefficients(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return {0.0};
  std::vector<double> in(values), out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_r2r_1d(n, in.data(), out.data(), FFTW_REDFT10, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  // REDFT10: Y_k = 2 sum_j x_j cos(pi k (j + 1/2) / n).
  for (double& v : out) v /= n;
  out[0] *= 0.5;
  return out;
}

Parity detect_parity(const RealFunction& g, double half_width, int samples) {
  bool even = true, odd = true;
  double scale = 0.0;
  std::vector<std::pair<double, double>> pairs;
  for (int k = 0; k < samples; ++k) {
    const double y = half_width * (k + 0.37) / samples;
    const double a = g(y), b = g(-y);
    pairs.emplace_back(a, b);
    scale = std::max({scale, std::abs(a), std::abs(b)});
  }
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (auto [a, b] : pairs) {
    if (std::abs(a - b) > tol) even = false;
    if (std::abs(a + b) > tol) odd = false;
  }
  if (even && odd) return Parity::Even;  // identically zero
  return even ? Parity::Even : odd ? Parity::Odd : Parity::None;
}

double sampled_sup_error(const RealPolynomial& poly, const RealFunction& g, double lo, double hi,
                         int samples) {
  double err = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double y = lo + (hi - lo) * k / (samples - 1);
    err = std::max(err, std::abs(poly(y) - g(y)));
  }
  return err;
}

double sampled_sup(const RealPolynomial& poly, double lo, double hi, int samples) {
  double sup = 0.0;
  for (int k = 0; k < samples; ++k) sup = std::max(sup, std::abs(poly(lo + (hi - lo) * k / (samples - 1))));
  return sup;
}

RealPolynomial cheb_fit(const RealFunction& g, double lo, double hi, double delta, int degree_cap) {
  if (!(delta > 0.0) || !(hi > lo)) throw ContractViolation("cheb_fit needs delta > 0 and lo < hi");
  const bool symmetric = std::abs(lo + hi) <= 1e-12 * (hi - lo);
  const Parity parity = symmetric ? detect_parity(g, hi) : Parity::None;

  // Interpolate at growing node counts until the coefficient tail is far
  // below the tolerance, so truncation errors are resolved.
  const int max_nodes = std::max(64, 4 * (degree_cap + 1));
  std::vector<double> c;
  bool resolved = false;
  for (int n = 64;; n *= 2) {
    n = std::min(n, max_nodes);
    const auto nodes = chebyshev_nodes(n);
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = g(0.5 * (hi - lo) * nodes[j] + 0.5 * (hi + lo));
    c = chebyshev_coefficients(vals);
    double tail = 0.0;
    for (int k = 3 * n / 4; k < n; ++k) tail += std::abs(c[k]);
    if (tail <= 1e-3 * delta) {
      resolved = true;
      break;
    }
    if (n == max_nodes) break;
  }
  if (parity != Parity::None) {
    const std::size_t skip = parity == Parity::Even ? 1 : 0;
    for (std::size_t k = skip; k < c.size(); k += 2) c[k] = 0.0;
  }

  // Tail-sum bound gives a safe upper degree.
  int upper = static_cast<int>(c.size()) - 1;
  double tail = 0.0;
  while (upper > 0 && tail + std::abs(c[upper]) <= 0.5 * delta) tail += std::abs(c[upper--]);
  if (!resolved && upper >= static_cast<int>(c.size()) * 3 / 4)
    throw ApproximationError("Chebyshev series did not resolve within the degree cap");

  auto truncated = [&](int n) {
    RealPolynomial p = RealPolynomial::from_chebyshev(std::vector<double>(c.begin(), c.begin() + n + 1), lo, hi);
    p.parity = parity;
    return p;
  };
  const int samples = std::max(2000, 10 * (upper + 1));
  auto ok = [&](int n) { return sampled_sup_error(truncated(n), g, lo, hi, samples) <= delta; };
  if (!ok(upper)) throw ApproximationError("Chebyshev truncation misses the tolerance on the sample grid");

  // Binary search over admissible degrees for the smallest passing one.
  const int step = parity == Parity::None ? 1 : 2;
  const int first = parity == Parity::Odd ? 1 : 0;
  // A wrong-parity top coefficient is zero, so stepping down loses nothing.
  if (parity != Parity::None && (upper - first) % 2) --upper;
  upper = std::max(upper, first);
  int lo_i = 0, hi_i = (upper - first) / step;
  while (lo_i < hi_i) {
    const int mid = (lo_i + hi_i) / 2;
    if (ok(first + mid * step)) {
      hi_i = mid;
    } else {
      lo_i = mid + 1;
    }
  }
  const int degree = first + hi_i * step;
  if (degree > degree_cap)
    throw ApproximationError("required degree " + std::to_string(degree) + " exceeds cap " +
                             std::to_string(degree_cap));
  return truncated(degree);
}

}  // namespace pdoenc
