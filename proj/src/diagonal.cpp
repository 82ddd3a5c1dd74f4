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


#include "pdoenc/diagonal.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pdoenc/combinators.hpp"
#include "pdoenc/errors.hpp"

namespace pdoenc {

std::vector<std::int64_t> branch_values(Branch sigma, int p) {
  const std::int64_t P = std::int64_t{1} << p;
  std::vector<std::int64_t> v(P);
  for (std::int64_t k = 0; k < P; ++k) v[k] = sigma == Branch::Minus ? fold_frequency(k, P) : k;
  return v;
}

std::int64_t branch_max_abs(Branch sigma, int p) {
  const std::int64_t P = std::int64_t{1} << p;
  return sigma == Branch::Minus ? P / 2 : P - 1;
}

DiagonalSpec DiagonalSpec::with_default_theta(Branch sigma, int p) {
  return DiagonalSpec{sigma, kPi / (3.0 * std::ldexp(1.0, p)), p};
}

void DiagonalSpec::validate() const {
  if (p < 1) throw ContractViolation("diagonal spec needs p >= 1");
  if (!(theta > 0.0) || theta * branch_max_abs(sigma, p) >= kPi / 2)
    throw ContractViolation("theta must satisfy 0 < theta * max|v| < pi/2, got theta = " +
                            std::to_string(theta));
}

double DiagonalSpec::reach() const { return kPi / (2.0 * theta); }

Circuit rot_diag(Branch sigma, double theta, int p) {
  Circuit c(p);
  for (int j = 0; j < p; ++j) {
    const double sign = (sigma == Branch::Minus && j == p - 1) ? -1.0 : 1.0;
    c.add(rz_gate(j, sign * std::ldexp(theta, j)));
  }
  return c;
}

Circuit rot_diag(const DiagonalSpec& spec) {
  spec.validate();
  return rot_diag(spec.sigma, spec.theta, spec.p);
}

BlockEncoding sin_diag_encoding(const DiagonalSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const int flag = p;
  const Circuit r = rot_diag(spec.sigma, spec.theta, p);
  Circuit c(p + 1);
  c.add(s_gate(flag));
  c.add(h_gate(flag));
  for (const auto& g : r.gates()) c.add(with_controls(g, {{flag, false}}));
  for (const auto& g : r.gates()) c.add(with_controls(g.inverse(), {{flag, true}}));
  c.add(h_gate(flag));
  c.add(x_gate(flag));
  c.add(s_gate(flag));
  c.set_global_phase(cplx(0.0, -1.0));

  BlockEncoding be;
  be.circuit = std::move(c);
  be.hermitian = true;
  be.input_wires.resize(p);
  std::iota(be.input_wires.begin(), be.input_wires.end(), 0);
  be.output_wires = be.input_wires;
  return be;
}

double SignedAngleBits::value() const { return std::ldexp(static_cast<double>(fraction), -width); }

std::uint64_t SignedAngleBits::packed() const {
  return fraction | (static_cast<std::uint64_t>(negative) << width);
}

SignedAngleBits theta_bits(double g, double C, int t) {
  if (!std::isfinite(g)) throw ContractViolation("non-finite diagonal value");
  if (t < 1 || t > 52) throw ContractViolation("angle width must be in [1, 52]");
  if (std::abs(g) > C * (1.0 + 1e-12))
    throw ContractViolation("|g| = " + std::to_string(std::abs(g)) + " exceeds C = " +
                            std::to_string(C));
  const double ratio = std::min(1.0, std::abs(g) / C);
  const double scaled = std::ldexp(std::asin(ratio) / kPi, t);
  // Nearest integer, ties toward zero.
  double k = std::floor(scaled);
  if (scaled - k > 0.5) k += 1.0;
  SignedAngleBits bits;
  bits.negative = g < 0.0;
  bits.fraction = static_cast<std::uint64_t>(k);
  bits.width = t;
  return bits;
}

int angle_bits_for(double C, double eps) {
  if (!(eps > 0.0) || !(C > 0.0)) throw ContractViolation("need C > 0 and eps > 0");
  return std::max(1, static_cast<int>(std::ceil(std::log2(C * kPi / eps))));
}

BlockEncoding arith_diag_encoding(const std::vector<double>& values, double C, double eps) {
  std::size_t dim = values.size();
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim || n < 1) throw DimensionMismatch("diagonal length must be 2^n");
  double sup = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw ContractViolation("non-finite diagonal value");
    sup = std::max(sup, std::abs(v));
  }
  if (sup > C * (1.0 + 1e-12))
    throw ContractViolation("C = " + std::to_string(C) + " is below sup|g| = " + std::to_string(sup));

  const int t = angle_bits_for(C, eps);
  std::vector<std::uint64_t> table(dim);
  for (std::size_t k = 0; k < dim; ++k) table[k] = theta_bits(values[k], C, t).packed();

  const int flag = n;
  const int base = n + 1;  // fraction bits base..base+t-1, sign bit base+t
  Circuit c(n + t + 2);
  std::vector<int> sys(n), reg(t + 1);
  std::iota(sys.begin(), sys.end(), 0);
  std::iota(reg.begin(), reg.end(), base);
  c.add(oracle_gate("theta", sys, reg, table));
  c.add(z_gate(base + t));
  for (int k = 0; k < t; ++k) c.add(with_controls(ry_gate(flag, kPi / std::ldexp(1.0, k)), {{base + t - 1 - k, true}}));
  c.add(x_gate(flag));
  c.add(oracle_gate("theta", sys, reg, table));

  BlockEncoding be;
  be.circuit = std::move(c);
  be.gamma = C;
  be.epsilon = eps;
  be.input_wires = sys;
  be.output_wires = sys;
  be.workspace = t + 1;
  return be;
}

BlockEncoding arith_diag_encoding(const std::function<double(std::int64_t)>& g, int system_wires,
                                  double C, double eps) {
  std::vector<double> values(std::size_t{1} << system_wires);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = g(static_cast<std::int64_t>(k));
  return arith_diag_encoding(values, C, eps);
}

BlockEncoding complex_diag_encoding(const std::vector<cplx>& values, double c_re, double c_im,
                                    double eps) {
  std::vector<double> re(values.size()), im(values.size());
  bool has_re = false, has_im = false;
  for (std::size_t k = 0; k < values.size(); ++k) {
    re[k] = values[k].real();
    im[k] = values[k].imag();
    has_re = has_re || re[k] != 0.0;
    has_im = has_im || im[k] != 0.0;
  }
  if (has_re && !(c_re > 0.0)) throw ContractViolation("C_re must be positive for a nonzero real part");
  if (has_im && !(c_im > 0.0)) throw ContractViolation("C_im must be positive for a nonzero imaginary part");
  if (!has_im) return arith_diag_encoding(re, c_re > 0.0 ? c_re : 1.0, eps);

  std::vector<cplx> y;
  std::vector<BlockEncoding> parts;
  const double total = (has_re ? c_re : 0.0) + c_im;
  if (has_re) {
    parts.push_back(arith_diag_encoding(re, c_re, eps * c_re / total));
    y.push_back(1.0);
  }
  parts.push_back(arith_diag_encoding(im, c_im, eps * c_im / total));
  y.push_back(cplx(0.0, 1.0));
  return lcu_weighted(y, parts);
}

}  // namespace pdoenc
