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


#include "pdoenc/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "pdoenc/approx.hpp"
#include "pdoenc/combinators.hpp"
#include "pdoenc/errors.hpp"
#include "pdoenc/gates.hpp"

namespace pdoenc {
namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 zexp(double phi) {
  Mat2 m;
  m << std::polar(1.0, phi), 0, 0, std::polar(1.0, -phi);
  return m;
}

Mat2 signal(double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  Mat2 m;
  m << x, cplx(0, s), cplx(0, s), x;
  return m;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a;
}

// Symmetric parametrization: phi_j = params[min(j, d - j)].
std::vector<double> expand(const std::vector<double>& params, int d) {
  std::vector<double> phi(d + 1);
  for (int j = 0; j <= d; ++j) phi[j] = params[std::min(j, d - j)];
  return phi;
}

// Re of the top-left entry and its gradient in the symmetric parameters.
double value_and_gradient(const std::vector<double>& phi, int n_params, double x,
                          std::vector<double>* grad) {
  const int d = static_cast<int>(phi.size()) - 1;
  const Mat2 w = signal(x);
  // prefix[j]: product of everything left of the e^{i phi_j Z} factor.
  std::vector<Mat2> prefix(d + 1), suffix(d + 1);
  prefix[0].setIdentity();
  for (int j = 1; j <= d; ++j) prefix[j] = prefix[j - 1] * zexp(phi[j - 1]) * w;
  suffix[d].setIdentity();
  for (int j = d - 1; j >= 0; --j) suffix[j] = w * zexp(phi[j + 1]) * suffix[j + 1];
  const double value = (prefix[d] * zexp(phi[d]))(0, 0).real();
  if (grad) {
    grad->assign(n_params, 0.0);
    Mat2 iz;
    iz << cplx(0, 1), 0, 0, cplx(0, -1);
    for (int j = 0; j <= d; ++j) {
      const double dj = (prefix[j] * iz * zexp(phi[j]) * suffix[j])(0, 0).real();
      (*grad)[std::min(j, d - j)] += dj;
    }
  }
  return value;
}

Parity resolve_parity(const RealPolynomial& target) {
  if (target.parity != Parity::None) return target.parity;
  // Infer from the coefficient pattern.
  bool even = true, odd = true;
  for (std::size_t k = 0; k < target.coeffs.size(); ++k) {
    if (target.coeffs[k] == 0.0) continue;
    if (k % 2 == 0) odd = false; else even = false;
  }
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::None;
}

double node_residual(const PhaseFactors& pf, const RealPolynomial& target, int nodes) {
  double worst = 0.0;
  for (double x : chebyshev_nodes(nodes))
    worst = std::max(worst, std::abs(qsp_real_part(pf, x) - target(x)));
  return worst;
}

// Hermitian encodings must act as reflections on the flag-zero subspace.
std::vector<int> flag_wires(const BlockEncoding& be) {
  std::vector<int> out;
  const int top = be.circuit.wire_count() - be.workspace;
  for (int w = be.system_wires(); w < top; ++w) out.push_back(w);
  return out;
}

}  // namespace

std::string PhaseFactors::to_text() const {
  std::ostringstream os;
  os << "# parity " << to_string(parity) << '\n' << std::setprecision(17);
  for (double p : phases) os << p << '\n';
  return os.str();
}

PhaseFactors PhaseFactors::from_text(const std::string& text) {
  PhaseFactors pf;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key, value;
      if (hs >> key >> value && key == "parity") {
        if (value == "even") pf.parity = Parity::Even;
        else if (value == "odd") pf.parity = Parity::Odd;
        else pf.parity = Parity::None;
      }
      continue;
    }
    std::size_t used = 0;
    const double v = std::stod(line, &used);
    if (line.find_first_not_of(" \t\r", used) != std::string::npos)
      throw ContractViolation("malformed phase line: " + line);
    pf.phases.push_back(v);
  }
  if (pf.phases.empty()) throw ContractViolation("phase list is empty");
  return pf;
}

Eigen::Matrix2cd qsp_matrix(const PhaseFactors& pf, double x) {
  if (std::abs(x) > 1.0) throw ContractViolation("qsp_matrix needs |x| <= 1");
  if (pf.phases.empty()) throw ContractViolation("empty phase list");
  const Mat2 w = signal(x);
  Mat2 u = zexp(pf.phases[0]);
  for (std::size_t k = 1; k < pf.phases.size(); ++k) u = u * w * zexp(pf.phases[k]);
  return u;
}

double qsp_real_part(const PhaseFactors& pf, double x) { return qsp_matrix(pf, x)(0, 0).real(); }

PhaseFactors find_phases(const RealPolynomial& target_in, const PhaseSolverOptions& opts) {
  if (std::abs(target_in.lo + 1.0) > 1e-12 || std::abs(target_in.hi - 1.0) > 1e-12)
    throw ContractViolation("QSP targets live on [-1, 1]");
  const Parity parity = resolve_parity(target_in);
  if (parity == Parity::None) throw ContractViolation("QSP target needs definite parity");
  const RealPolynomial target = target_in.with_parity(parity);
  int d = target.degree();
  if ((parity == Parity::Even) != (d % 2 == 0)) ++d;  // e.g. an odd target stored as zero
  if (d > opts.degree_cap)
    throw ContractViolation("QSP degree " + std::to_string(d) + " exceeds cap " +
                            std::to_string(opts.degree_cap));
  const double sup = sampled_sup(target, -1.0, 1.0, std::max(2001, 20 * d + 1));
  // sup = 1 is accepted (T_d itself is reachable) but may converge slowly.
  if (sup > 1.0 + 1e-12) throw ContractViolation("QSP target must satisfy sup |f| <= 1");

  PhaseFactors pf;
  pf.parity = parity;
  if (d == 0) {
    pf.phases = {std::acos(target(0.0))};
    return pf;
  }

  const int n = d / 2 + 1;
  std::vector<double> nodes(n), goal(n);
  for (int k = 1; k <= n; ++k) {
    nodes[k - 1] = std::cos((2.0 * k - 1.0) * kPi / (4.0 * n));
    goal[k - 1] = target(nodes[k - 1]);
  }

  auto residual = [&](const std::vector<double>& params, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    const auto phi = expand(params, d);
    r.resize(n);
    if (jac) jac->resize(n, n);
    std::vector<double> g;
    for (int k = 0; k < n; ++k) {
      r[k] = value_and_gradient(phi, n, nodes[k], jac ? &g : nullptr) - goal[k];
      if (jac)
        for (int i = 0; i < n; ++i) (*jac)(k, i) = g[i];
    }
    return r.norm();
  };

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> jitter(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    std::vector<double> params(n, 0.0);
    params[0] = kPi / 4;
    if (attempt > 0)
      for (double& p : params) p += 0.05 * attempt * jitter(rng);

    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    double norm = residual(params, r, &jac);
    double lambda = 1e-8;
    for (int it = 0; it < opts.max_iterations && norm > 1e-14; ++it) {
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd jtr = jac.transpose() * r;
      bool improved = false;
      for (int inner = 0; inner < 30; ++inner) {
        Eigen::MatrixXd damped = jtj;
        damped.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
        const Eigen::VectorXd step = damped.ldlt().solve(-jtr);
        std::vector<double> trial(params);
        for (int i = 0; i < n; ++i) trial[i] += step[i];
        Eigen::VectorXd r_trial;
        const double n_trial = residual(trial, r_trial, nullptr);
        if (n_trial < norm) {
          params = std::move(trial);
          lambda = std::max(lambda * 0.1, 1e-15);
          improved = true;
          break;
        }
        lambda *= 10.0;
      }
      if (!improved) break;
      norm = residual(params, r, &jac);
    }

    pf.phases = expand(params, d);
    for (double& p : pf.phases) p = wrap_angle(p);
    const double check = node_residual(pf, target, d + 1);
    best = std::min(best, check);
    if (check <= opts.tolerance) return pf;
  }
  throw SolverFailure("phase solver did not converge at degree " + std::to_string(d), best);
}

std::vector<double> reflection_phases(const PhaseFactors& pf) {
  const int d = pf.degree();
  std::vector<double> r(pf.phases);
  if (d >= 1) {
    r[0] = pf.phases[0] - kPi / 4 + d * kPi / 2;
    r[d] = pf.phases[d] - kPi / 4;
    for (int j = 1; j < d; ++j) r[j] = pf.phases[j] - kPi / 2;
  }
  for (double& a : r) a = wrap_angle(a);
  return r;
}

BlockEncoding qet_circuit(const BlockEncoding& ua, const PhaseFactors& pf) {
  if (!ua.hermitian) throw ContractViolation("QET needs a Hermitian block encoding");
  if (!ua.is_canonical()) throw ContractViolation("QET needs matching input and output system wires");
  if (pf.phases.empty()) throw ContractViolation("empty phase list");
  const int n = ua.system_wires();
  const auto flags = flag_wires(ua);
  const int sig = n + static_cast<int>(flags.size());
  const int width = ua.circuit.wire_count() + 1;

  std::vector<int> map(ua.circuit.wire_count());
  for (int w = 0; w < ua.circuit.wire_count(); ++w) map[w] = w < sig ? w : w + 1;

  const auto r = reflection_phases(pf);
  const int d = pf.degree();
  Circuit c(width);
  c.add(h_gate(sig));
  append_cr_phi(c, sig, flags, r[d]);
  for (int j = d - 1; j >= 0; --j) {
    c.append(ua.circuit, map);
    append_cr_phi(c, sig, flags, r[j]);
  }
  c.add(h_gate(sig));

  BlockEncoding out;
  out.circuit = std::move(c);
  out.gamma = 1.0;
  out.input_wires = ua.input_wires;
  out.output_wires = ua.output_wires;
  out.workspace = ua.workspace;
  return out;
}

BlockEncoding eigen_transform_encoding(const BlockEncoding& ua, const RealFunction& f, double c_f,
                                       double eps, int degree_cap) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  const int samples = 4001;
  auto even = [&f](double x) { return 0.5 * (f(x) + f(-x)); };
  auto odd = [&f](double x) { return 0.5 * (f(x) - f(-x)); };
  double sup_f = 0.0, sup_e = 0.0, sup_o = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = -1.0 + 2.0 * k / (samples - 1);
    sup_f = std::max(sup_f, std::abs(f(x)));
    sup_e = std::max(sup_e, std::abs(even(x)));
    sup_o = std::max(sup_o, std::abs(odd(x)));
  }
  if (c_f < std::max(1.0, sup_f) * (1.0 - 1e-12)) throw ContractViolation("C_f must be at least max(1, sup |f|)");

  const double negligible = 1e-14 * std::max(1.0, sup_f);
  std::vector<BlockEncoding> branches;
  const bool both = sup_e > negligible && sup_o > negligible;
  const double budget = both ? eps / 2.0 : eps;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const double sup_part = parity == Parity::Even ? sup_e : sup_o;
    if (sup_part <= negligible) continue;
    const RealFunction part = parity == Parity::Even ? RealFunction(even) : RealFunction(odd);
    // Fit to budget/4, then shrink by C_f + budget/2 so that |f~| < 1 while
    // |part - C_f f~| stays within 3 budget / 4.
    const RealPolynomial fit = cheb_fit(part, -1.0, 1.0, budget / 4.0, degree_cap).with_parity(parity);
    const RealPolynomial shrunk = fit.scaled(1.0 / (c_f + budget / 2.0));
    BlockEncoding be = qet_circuit(ua, find_phases(shrunk));
    be.gamma = c_f;
    be.epsilon = budget;
    branches.push_back(std::move(be));
  }
  if (branches.empty()) {
    BlockEncoding z = zero_encoding(ua.system_wires());
    z.gamma = c_f;
    return z;
  }
  if (branches.size() == 1) return branches.front();
  return lcu_weighted({cplx(1.0), cplx(1.0)}, branches);
}

DiagFunctionEncoding build_diag_function(const RealFunction& g, const DiagonalSpec& spec, double c_g,
                                         double eps, const DiagFunctionOptions& opts) {
  spec.validate();
  if (!(eps > 0.0) || !(c_g > 0.0)) throw ContractViolation("need C_g > 0 and eps > 0");
  const double reach = spec.reach();
  const Parity parity = detect_parity(g, reach);
  if (parity == Parity::None) throw ContractViolation("g must be even or odd");
  const int samples = 8001;
  for (int k = 0; k < samples; ++k) {
    const double y = -reach + 2.0 * reach * k / (samples - 1);
    if (std::abs(g(y)) > c_g * (1.0 + 1e-12))
      throw ContractViolation("C_g must bound |g| on [-pi/(2 theta), pi/(2 theta)]");
  }

  const RealPolynomial u = opts.u ? *opts.u : cheb_fit(g, -reach, reach, eps / 4.0, opts.degree_cap).with_parity(parity);
  const double radius = opts.radius > 0.0 ? opts.radius : static_cast<double>(branch_max_abs(spec.sigma, spec.p));

  DiagFunctionEncoding out;
  out.derivative_bound = derivative_bound(u);
  out.composite = arcsin_compose(u, spec.theta, radius, c_g, out.derivative_bound, eps, opts.degree_cap);
  const CompositeCheck check = check_arcsin_composite(out.composite, g, spec.theta, radius, c_g);
  out.composite_error = check.max_error;
  if (check.max_error > eps)
    throw ApproximationError("composite misses eps: error " + std::to_string(check.max_error));
  out.phases = find_phases(out.composite);
  out.encoding = qet_circuit(sin_diag_encoding(spec), out.phases);
  out.encoding.gamma = c_g;
  out.encoding.epsilon = eps;
  return out;
}

BlockEncoding diag_function_encoding(const RealFunction& g, const DiagonalSpec& spec, double c_g,
                                     double eps, const DiagFunctionOptions& opts) {
  return build_diag_function(g, spec, c_g, eps, opts).encoding;
}

}  // namespace pdoenc
