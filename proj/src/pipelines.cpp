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


#include "pdoenc/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pdoenc/combinators.hpp"
#include "pdoenc/diagonal.hpp"
#include "pdoenc/errors.hpp"
#include "pdoenc/gates.hpp"
#include "pdoenc/qsp.hpp"

namespace pdoenc {
namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

BlockEncoding unitary_encoding(Circuit c) {
  BlockEncoding be;
  const int n = c.wire_count();
  be.circuit = std::move(c);
  be.input_wires = range(0, n);
  be.output_wires = be.input_wires;
  return be;
}

// Scale the diagonal encoder will report for these values with |v| <= bound.
double diagonal_scale(const std::vector<cplx>& values, double bound) {
  bool has_re = false, has_im = false;
  for (const auto& v : values) {
    has_re = has_re || v.real() != 0.0;
    has_im = has_im || v.imag() != 0.0;
  }
  if (!has_im) return bound;
  return has_re ? 2.0 * bound : bound;
}

BlockEncoding diagonal_encoding(const std::vector<cplx>& values, double bound, double eps) {
  return complex_diag_encoding(values, bound, bound, eps);
}

double sup_on(const RealFunction& g, double half_width) {
  const int samples = 8001;
  double m = 0.0;
  for (int k = 0; k < samples; ++k) m = std::max(m, std::abs(g(-half_width + 2.0 * half_width * k / (samples - 1))));
  return m;
}

struct FactorPlan {
  Factor factor;
  Branch sigma;
  RealFunction g;  // acting on the integer register value
  double constant = 1.0;
};

FactorPlan plan_factor(const Factor& f, Branch sigma, const GridSpec& grid) {
  FactorPlan plan{f, sigma, {}, 1.0};
  if (f.kind == Factor::Kind::Exponential) return plan;
  const double P = static_cast<double>(grid.P());
  if (sigma == Branch::Plus) {
    RealFunction g = f.g;
    plan.g = [g, P](double y) { return g(y / P); };
  } else {
    plan.g = f.g;
  }
  const double reach = kPi / (2.0 * factor_theta(sigma, grid.p));
  plan.constant = std::max(f.bound, sup_on(plan.g, reach));
  return plan;
}

BlockEncoding encode_factor(const FactorPlan& plan, const GridSpec& grid, double eps) {
  const int p = grid.p;
  if (plan.factor.kind == Factor::Kind::Exponential) {
    if (plan.factor.theta == 0.0) return identity_encoding(p);
    // alpha(x / P) = exp(i (theta / P) x) on the plain branch.
    const double theta = plan.sigma == Branch::Plus ? plan.factor.theta / static_cast<double>(grid.P()) : plan.factor.theta;
    return unitary_encoding(rot_diag(plan.sigma, theta, p));
  }
  const DiagonalSpec spec{plan.sigma, factor_theta(plan.sigma, p), p};
  return diag_function_encoding(plan.g, spec, plan.constant, eps);
}

}  // namespace

double factor_theta(Branch sigma, int p) {
  const double P = std::ldexp(1.0, p);
  return sigma == Branch::Minus ? kPi / (2.0 * P) : kPi / (3.0 * P);
}

BlockEncoding generic_pdo_encoding(const WrappedSymbol& w, double bound, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  const GridSpec& grid = w.grid;
  const int n = grid.wires();
  const std::int64_t N = grid.N();
  std::vector<cplx> values(N * N);
  for (std::int64_t x = 0; x < N; ++x)
    for (std::int64_t xi = 0; xi < N; ++xi) values[xi + N * x] = w(x, xi);
  const double root_n = std::sqrt(static_cast<double>(N));
  const BlockEncoding diag = canonicalize(diagonal_encoding(values, bound, eps / root_n));

  Circuit c(diag.circuit.wire_count());
  const Circuit iqft = inverse_qft_circuit(grid.p);
  for (int k = 0; k < grid.d; ++k) c.append(iqft, range(k * grid.p, (k + 1) * grid.p));
  for (int w2 = n; w2 < 2 * n; ++w2) c.add(h_gate(w2));
  c.append(phase_mult_multidim(grid.p, grid.d), range(0, 2 * n));
  c.append(diag.circuit);
  for (int w2 = 0; w2 < n; ++w2) c.add(h_gate(w2));

  BlockEncoding be;
  be.circuit = std::move(c);
  be.gamma = root_n * diag.gamma;
  be.epsilon = eps;
  be.input_wires = range(0, n);
  be.output_wires = range(n, 2 * n);
  be.workspace = diag.workspace;
  return canonicalize(be);
}

BlockEncoding generic_pdo_encoding(const GenericSymbol& s, const GridSpec& grid, double eps) {
  return generic_pdo_encoding(wrap_symbol(s, grid), s.bound, eps);
}

BlockEncoding separable_pdo_encoding(const SeparableSymbol& s, const GridSpec& grid, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  const WrappedSymbol w = wrap_symbol(s, grid);
  const auto& alpha = w.alpha.front();
  const auto& beta = w.beta.front();
  const double g_alpha = diagonal_scale(alpha, s.alpha_bound);
  const double g_beta = diagonal_scale(beta, s.beta_bound);
  const BlockEncoding ub = diagonal_encoding(beta, s.beta_bound, eps / (2.0 * g_alpha));
  const BlockEncoding ua = diagonal_encoding(alpha, s.alpha_bound, eps / (2.0 * g_beta));
  BlockEncoding out = product(ua, conjugate_by_qft(ub, grid.d));
  out.epsilon = eps;
  return out;
}

BlockEncoding fully_separable_pdo_encoding(const FullySeparableSymbol& s, const GridSpec& grid, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("eps must be positive");
  const int d = grid.d;
  if (static_cast<int>(s.alpha.size()) != d || static_cast<int>(s.beta.size()) != d)
    throw DimensionMismatch("fully separable symbol needs d factors on each side");
  for (const auto& f : s.alpha) check_factor_parity(f, 1.5);
  for (const auto& f : s.beta) check_factor_parity(f, 1.5 * static_cast<double>(grid.P()));

  std::vector<FactorPlan> alpha, beta;
  double c_total = 1.0;
  for (const auto& f : s.alpha) {
    alpha.push_back(plan_factor(f, Branch::Plus, grid));
    c_total *= alpha.back().constant;
  }
  for (const auto& f : s.beta) {
    beta.push_back(plan_factor(f, Branch::Minus, grid));
    c_total *= beta.back().constant;
  }
  const double tol = eps / (2.0 * d * c_total);

  auto side = [&](const std::vector<FactorPlan>& plans) {
    std::vector<BlockEncoding> parts;
    bool trivial = true;
    for (const auto& plan : plans) {
      parts.push_back(encode_factor(plan, grid, tol));
      trivial = trivial && plan.factor.is_one();
    }
    return std::make_pair(tensor_encodings(parts), trivial);
  };
  auto [ua, alpha_trivial] = side(alpha);
  auto [ub, beta_trivial] = side(beta);

  BlockEncoding out;
  if (beta_trivial) {
    out = ua;
  } else {
    const BlockEncoding mult = conjugate_by_qft(ub, d);
    out = alpha_trivial ? mult : product(ua, mult);
  }
  out.gamma = c_total;
  out.epsilon = eps;
  return out;
}

BlockEncoding encode_symbol(const SymbolSpec& s, const GridSpec& grid, double eps) {
  return std::visit(
      [&](const auto& v) -> BlockEncoding {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GenericSymbol>) return generic_pdo_encoding(v, grid, eps);
        else if constexpr (std::is_same_v<T, SeparableSymbol>) return separable_pdo_encoding(v, grid, eps);
        else if constexpr (std::is_same_v<T, FullySeparableSymbol>) return fully_separable_pdo_encoding(v, grid, eps);
        else return lcu_pdo_encoding(v, grid, eps);
      },
      s);
}

BlockEncoding lcu_pdo_encoding(const LinearCombination& s, const GridSpec& grid, double eps) {
  if (s.y.size() != s.terms.size()) throw DimensionMismatch("coefficient and term counts differ");
  if (s.terms.empty()) throw ContractViolation("empty linear combination");
  std::vector<BlockEncoding> parts;
  for (const auto& term : s.terms)
    parts.push_back(std::visit([&](const auto& v) { return encode_symbol(SymbolSpec(v), grid, eps); }, term));
  if (parts.size() == 1 && s.y.front() == cplx(1.0)) return parts.front();
  BlockEncoding out = lcu_weighted(s.y, parts);
  out.epsilon = (1.0 + out.gamma) * eps;
  return out;
}

BlockEncoding elliptic_encoding(const std::vector<FourierMode>& omega, const GridSpec& grid, double eps) {
  return lcu_pdo_encoding(elliptic_symbol(omega, grid), grid, eps);
}

RadialInverse build_radial_inverse(const GridSpec& grid, double eps, int degree_cap) {
  if (!(eps > 0.0 && eps <= 0.5)) throw ContractViolation("eps must lie in (0, 1/2]");
  const int d = grid.d, p = grid.p;
  const double P = static_cast<double>(grid.P());
  RadialInverse out;
  out.terms = inv_elliptic_terms(d, P, eps);
  const std::size_t M = out.terms.size();
  const double W = out.terms.total_weight();

  // Sharp Gaussians need the highest degrees but carry little weight: drop
  // from the largest exponent down while the dropped weight stays <= eps/4.
  std::vector<std::size_t> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.terms.exponents[a] > out.terms.exponents[b]; });
  out.kept.assign(M, true);
  for (std::size_t idx : order) {
    const double w = std::abs(out.terms.weights[idx]);
    if (out.dropped_weight + w > eps / 4.0) break;
    out.dropped_weight += w;
    out.kept[idx] = false;
  }

  const DiagonalSpec spec = DiagonalSpec::with_default_theta(Branch::Minus, p);
  const double reach = spec.reach();
  const double tol = eps / (2.0 * W * d);
  std::vector<cplx> y(M);
  std::vector<BlockEncoding> parts;
  for (std::size_t m = 0; m < M; ++m) {
    y[m] = out.terms.weights[m];
    if (!out.kept[m]) {
      parts.push_back(zero_encoding(grid.wires()));
      continue;
    }
    const double a = out.terms.exponents[m];
    const RealPolynomial u = gaussian_poly(a, reach, tol / 4.0, degree_cap);
    DiagFunctionOptions opts;
    opts.u = &u;
    opts.degree_cap = degree_cap;
    const BlockEncoding one =
        diag_function_encoding([a](double xi) { return std::exp(-a * xi * xi); }, spec, 1.0, tol, opts);
    parts.push_back(tensor_encodings(std::vector<BlockEncoding>(d, one)));
  }
  BlockEncoding lcu = lcu_weighted(y, parts);
  out.encoding = conjugate_by_qft(lcu, d);
  out.encoding.gamma = lcu.gamma;
  out.encoding.epsilon = eps;
  return out;
}

BlockEncoding radial_multiplier_inverse_encoding(const GridSpec& grid, double eps) {
  return build_radial_inverse(grid, eps).encoding;
}

EncodingReport verify_encoding(const BlockEncoding& be, const DenseOperator& reference) {
  return verify_encoding(be, reference, be.epsilon);
}

EncodingReport verify_encoding(const BlockEncoding& be, const DenseOperator& reference, double bound) {
  const DenseOperator block = extract_block(be);
  if (block.rows() != reference.rows() || block.cols() != reference.cols())
    throw DimensionMismatch("reference does not match the encoded block");
  const DenseOperator defect = be.gamma * block - reference;
  EncodingReport r;
  r.gamma = be.gamma;
  r.ancillas = be.ancilla_count();
  r.claimed_error = bound;
  r.defect_spectral = spectral_norm(defect);
  r.defect_max = max_abs(defect);
  r.elementary_gates = be.circuit.elementary_gate_count();
  r.oracle_calls = be.circuit.oracle_call_count();
  const Eigen::Index dim = block.cols();
  const StateVector ones = StateVector::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  r.success_probability = (block * ones).squaredNorm();
  r.within_bound = r.defect_spectral <= bound * (1.0 + 1e-9) + 1e-12;
  return r;
}

}  // namespace pdoenc
