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


// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <Eigen/QR>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pdoenc/approx.hpp"
#include "pdoenc/gates.hpp"
#include "pdoenc/pipelines.hpp"
#include "pdoenc/qsp.hpp"

using namespace pdoenc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "[exception: " << e.what() << "] ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs >= time_limit) {
    o.pass = false;
    o.detail << "[over time limit " << time_limit << " s] ";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %-28s %.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

DenseOperator diag_of(const std::vector<cplx>& v) {
  DenseOperator d = DenseOperator::Zero(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d(i, i) = v[i];
  return d;
}

DenseOperator direct_dft(std::int64_t N) {
  DenseOperator f(N, N);
  for (std::int64_t j = 0; j < N; ++j)
    for (std::int64_t k = 0; k < N; ++k)
      f(j, k) = std::polar(1.0 / std::sqrt(double(N)), 2.0 * kPi * double(j * k % N) / double(N));
  return f;
}

std::int64_t controlled_rotations(const Circuit& c) {
  std::int64_t n = 0;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::Rz && g.controls.size() == 1) ++n;
  return n;
}

DenseOperator random_unitary(int dim, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  DenseOperator a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(n(rng), n(rng));
  Eigen::HouseholderQR<DenseOperator> qr(a);
  return qr.householderQ();
}

// Quantization on a d = 1 grid, written out directly:
// A(j, k) = (1/P) sum_xi a(j/P, xi_folded) e^{2 pi i xi (j - k) / P}.
DenseOperator quantize_1d(std::int64_t P, const std::function<cplx(double, std::int64_t)>& a) {
  DenseOperator m = DenseOperator::Zero(P, P);
  for (std::int64_t j = 0; j < P; ++j)
    for (std::int64_t k = 0; k < P; ++k)
      for (std::int64_t xi = 0; xi < P; ++xi) {
        const std::int64_t folded = xi >= P / 2 ? xi - P : xi;
        m(j, k) += a(double(j) / double(P), folded) *
                   std::polar(1.0 / double(P), 2.0 * kPi * double(xi * (j - k)) / double(P));
      }
  return m;
}

// Same for d = 2 with row-major coordinate packing (coordinate k on bits [k p, (k+1) p)).
DenseOperator quantize_2d(int p, const std::function<cplx(double, double, std::int64_t, std::int64_t)>& a) {
  const std::int64_t P = std::int64_t{1} << p, N = P * P;
  const auto fold = [P](std::int64_t v) { return v >= P / 2 ? v - P : v; };
  DenseOperator m = DenseOperator::Zero(N, N);
  for (std::int64_t j = 0; j < N; ++j)
    for (std::int64_t k = 0; k < N; ++k) {
      const std::int64_t j0 = j % P, j1 = j / P, k0 = k % P, k1 = k / P;
      for (std::int64_t x0 = 0; x0 < P; ++x0)
        for (std::int64_t x1 = 0; x1 < P; ++x1)
          m(j, k) += a(double(j0) / double(P), double(j1) / double(P), fold(x0), fold(x1)) *
                     std::polar(1.0 / double(N), 2.0 * kPi * double(x0 * (j0 - k0) + x1 * (j1 - k1)) / double(P));
    }
  return m;
}

double defect(const BlockEncoding& be, const DenseOperator& ref) {
  return spectral_norm(extract_block(be) * be.gamma - ref);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "phase multiplication", 1.0, [](Outcome& o) {
    double worst = 0.0;
    for (int p = 1; p <= 4; ++p) {
      const std::int64_t P = std::int64_t{1} << p;
      const Circuit c = phase_mult_circuit(p);
      const DenseOperator u = circuit_unitary(c);
      DenseOperator ref = DenseOperator::Zero(P * P, P * P);
      for (std::int64_t x = 0; x < P; ++x)
        for (std::int64_t xi = 0; xi < P; ++xi)
          ref(xi | (x << p), xi | (x << p)) = std::polar(1.0, 2.0 * kPi * double(x * xi) / double(P));
      worst = std::max(worst, max_abs(u - ref));
      o.check(controlled_rotations(c) == p * (p + 1) / 2, "rotation count p=" + std::to_string(p));
    }
    o.check(worst <= 1e-12, "unitary deviation");
    o.detail << "max dev " << fmt(worst);
  });

  criterion(2, "qft", 0, [](Outcome& o) {
    double worst = 0.0;
    for (int p = 1; p <= 5; ++p) {
      const Circuit c = qft_circuit(p);
      worst = std::max(worst, max_abs(circuit_unitary(c) - direct_dft(std::int64_t{1} << p)));
      o.check(controlled_rotations(c) == p * (p - 1) / 2, "rotation count p=" + std::to_string(p));
    }
    o.check(worst <= 1e-12, "dft deviation");
    o.detail << "max dev " << fmt(worst);
  });

  criterion(3, "sine diagonal primitive", 0, [](Outcome& o) {
    std::mt19937 rng(31);
    double block_dev = 0.0, herm_dev = 0.0;
    for (int p = 1; p <= 5; ++p) {
      const double cap = kPi / (2.0 * double(std::int64_t{1} << p));
      std::uniform_real_distribution<double> th(0.0, cap);
      for (Branch s : {Branch::Minus, Branch::Plus})
        for (int trial = 0; trial < 20; ++trial) {
          double theta = 0.0;
          while (theta <= 0.0 || theta >= cap) theta = th(rng);
          const BlockEncoding be = sin_diag_encoding(DiagonalSpec{s, theta, p});
          std::vector<cplx> expect;
          for (auto v : branch_values(s, p)) expect.emplace_back(std::sin(theta * double(v)));
          block_dev = std::max(block_dev, max_abs(extract_block(be) - diag_of(expect)));
          const DenseOperator u = circuit_unitary(be.circuit);
          herm_dev = std::max(herm_dev, max_abs(u - dagger(u)));
          if (be.circuit.elementary_gate_count() != 2 * p + 5) o.check(false, "gate count p=" + std::to_string(p));
        }
    }
    o.check(block_dev <= 1e-12, "block");
    o.check(herm_dev <= 1e-12, "hermitian");
    o.detail << "block dev " << fmt(block_dev) << ", hermitian dev " << fmt(herm_dev);
  });

  criterion(4, "qsp round trip", 60.0, [](Outcome& o) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> deg(1, 30);
    std::normal_distribution<double> n(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const int d = deg(rng);
      std::vector<double> c(d + 1, 0.0);
      for (int k = d % 2; k <= d; k += 2) c[k] = n(rng) / (1.0 + k);
      RealPolynomial t = RealPolynomial::from_chebyshev(c);
      t = t.scaled(0.9 / sampled_sup(t, -1.0, 1.0, 4001));
      const PhaseFactors ph = find_phases(t);
      for (int i = 0; i < 200; ++i) {
        const double x = -1.0 + 2.0 * i / 199;
        worst = std::max(worst, std::abs(qsp_real_part(ph, x) - t(x)));
      }
    }
    o.check(worst <= 1e-7, "residual");
    o.detail << "max residual " << fmt(worst);
  });

  criterion(5, "arithmetic diagonal encoder", 0, [](Outcome& o) {
    const int p = 3;
    const double P = 8.0;
    const std::vector<std::function<double(std::int64_t)>> gs{
        [P](std::int64_t x) { return double(x) / (P - 1); },
        [P](std::int64_t x) { return std::sin(2 * kPi * double(x) / P); },
        [P](std::int64_t x) { return -std::cos(2 * kPi * double(x) / P); }};
    double worst = 0.0, leak = 0.0;
    for (const auto& g : gs)
      for (double eps : {1e-2, 1e-4}) {
        const BlockEncoding be = arith_diag_encoding(g, p, 1.0, eps);
        const int t = int(std::ceil(std::log2(kPi / eps)));
        o.check(angle_bits_for(1.0, eps) == t && be.workspace == t + 1, "angle bits at eps " + fmt(eps));
        const DenseOperator blk = extract_block(be) * be.gamma;
        for (int x = 0; x < 8; ++x) worst = std::max(worst, std::abs(blk(x, x) - g(x)) / eps);
        o.check(max_abs(blk - DenseOperator(blk.diagonal().asDiagonal())) <= 1e-12, "off-diagonal");
        const int w = be.circuit.wire_count();
        const int low = w - be.workspace;
        for (int x = 0; x < 8; ++x) {
          const StateVector out = apply_circuit(be.circuit, basis_state(w, x));
          for (std::int64_t k = 0; k < out.size(); ++k)
            if ((k >> low) != 0) leak = std::max(leak, std::abs(out[k]));
        }
      }
    o.check(worst <= 1.0, "defect");
    o.check(leak == 0.0, "workspace restoration");
    o.detail << "max defect/eps " << fmt(worst) << ", workspace leak " << fmt(leak);
  });

  criterion(6, "generic pipeline", 30.0, [](Outcome& o) {
    const GridSpec g(2, 1);
    const double eps = 1e-3;
    const auto raised = [](double x, std::int64_t xi) {
      return cplx((1 + std::cos(2 * kPi * x)) * (1 + std::cos(2 * kPi * double(xi) / 4.0)) / 4.0);
    };
    const GenericSymbol s1{[&](auto& x, auto& xi) { return raised(x[0], xi[0]); }, 1.0};
    const BlockEncoding b1 = generic_pdo_encoding(s1, g, eps);
    const double d1 = defect(b1, quantize_1d(4, raised));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::vector<cplx> table(16);
    for (auto& v : table) v = u(rng);
    const GenericSymbol s2 = GenericSymbol::from_table(g, table, 0.8);
    const BlockEncoding b2 = generic_pdo_encoding(s2, g, eps);
    // Table is indexed by the unfolded frequency.
    const double d2 = defect(b2, quantize_1d(4, [&](double x, std::int64_t xi) {
                               return table[std::size_t((xi + 4) % 4 + 4 * std::llround(x * 4))];
                             }));

    const GenericSymbol one{[](auto&, auto&) { return cplx(1.0); }, 1.0};
    const BlockEncoding b3 = generic_pdo_encoding(one, g, eps);
    const double prob = success_probability(b3, StateVector::Constant(4, cplx(0.5)));

    o.check(d1 <= eps && d2 <= eps, "defect");
    o.check(b1.gamma == 2.0 * 1.0 && b2.gamma == 2.0 * 0.8, "gamma");
    o.check(std::abs(prob - 0.25) <= 1e-10, "success probability");
    o.detail << "defects " << fmt(d1) << ", " << fmt(d2) << "; gamma " << b1.gamma << ", " << b2.gamma
             << "; success " << prob;
  });

  criterion(7, "separable pipeline", 60.0, [](Outcome& o) {
    const double eps = 1e-3;
    {
      const GridSpec g(3, 1);
      const auto a = [](double x) { return 0.5 + 0.5 * x; };
      const auto b = [](std::int64_t xi) { return 1.0 / (1.0 + double(xi * xi)); };
      const SeparableSymbol s{[&](auto& x) { return cplx(a(x[0])); }, [&](auto& xi) { return cplx(b(xi[0])); },
                              1.0, 1.0};
      const BlockEncoding be = separable_pdo_encoding(s, g, eps);
      const double d = defect(be, quantize_1d(8, [&](double x, std::int64_t xi) { return cplx(a(x) * b(xi)); }));
      o.check(d <= eps, "defect p=3 d=1");
      o.check(be.gamma == 1.0 * 1.0, "gamma p=3 d=1");
      o.detail << "p=3,d=1: defect " << fmt(d) << " gamma " << be.gamma << "; ";
    }
    {
      const GridSpec g(2, 2);
      const auto a = [](double x0, double x1) { return 1.0 + 0.5 * (x0 + x1); };
      const auto b = [](std::int64_t k0, std::int64_t k1) { return cplx(double(k0 - k1) / 4.0); };
      const SeparableSymbol s{[&](auto& x) { return cplx(a(x[0], x[1])); }, [&](auto& xi) { return b(xi[0], xi[1]); },
                              2.0, 1.0};
      const BlockEncoding be = separable_pdo_encoding(s, g, eps);
      const double d = defect(be, quantize_2d(2, [&](double x0, double x1, std::int64_t k0, std::int64_t k1) {
                                return a(x0, x1) * b(k0, k1);
                              }));
      o.check(d <= eps, "defect p=2 d=2");
      o.check(be.gamma == 2.0 * 1.0, "gamma p=2 d=2");
      o.detail << "p=2,d=2: defect " << fmt(d) << " gamma " << be.gamma;
    }
  });

  criterion(8, "fully separable pipeline", 0, [](Outcome& o) {
    const double eps = 1e-3;
    // Ancillas of one non-trivial factor encoded on its own.
    const auto factor_ancillas = [eps](const GridSpec& g, const FullySeparableSymbol& s) {
      int total = 0;
      const auto ones = [&] { return std::vector<Factor>(std::size_t(g.d), Factor::one()); };
      for (int k = 0; k < g.d; ++k) {
        if (s.alpha[k].kind != Factor::Kind::Exponential) {
          FullySeparableSymbol t{ones(), ones()};
          t.alpha[k] = s.alpha[k];
          total += fully_separable_pdo_encoding(t, g, eps).ancilla_count();
        }
        if (s.beta[k].kind != Factor::Kind::Exponential) {
          FullySeparableSymbol t{ones(), ones()};
          t.beta[k] = s.beta[k];
          total += fully_separable_pdo_encoding(t, g, eps).ancilla_count();
        }
      }
      return total;
    };
    const auto run = [&](const char* label, const GridSpec& g, const FullySeparableSymbol& s, const DenseOperator& ref) {
      const BlockEncoding be = fully_separable_pdo_encoding(s, g, eps);
      const double d = defect(be, ref);
      const int bound = 4 * g.d + factor_ancillas(g, s);
      o.check(d <= eps, std::string("defect ") + label);
      o.check(be.ancilla_count() <= bound, std::string("ancillas ") + label);
      o.detail << label << ": defect " << fmt(d) << " ancillas " << be.ancilla_count() << "/" << bound << "; ";
    };

    const GridSpec g1(2, 2);
    run("ones", g1, FullySeparableSymbol{{Factor::one(), Factor::one()}, {Factor::one(), Factor::one()}},
        DenseOperator::Identity(16, 16));

    const GridSpec g2(3, 1);
    run("cos*lin", g2,
        FullySeparableSymbol{{Factor::even([](double x) { return std::cos(2 * kPi * x); }, 1.0)},
                             {Factor::odd([](double xi) { return 2 * xi / 8.0; }, 1.0)}},
        quantize_1d(8, [](double x, std::int64_t xi) { return cplx(std::cos(2 * kPi * x) * 2.0 * double(xi) / 8.0); }));

    const auto lin = Factor::odd([](double xi) { return 2 * xi / 4.0; }, 1.0);
    run("lin*lin", g1, FullySeparableSymbol{{Factor::one(), Factor::one()}, {lin, lin}},
        quantize_2d(2, [](double, double, std::int64_t k0, std::int64_t k1) {
          return cplx((2.0 * double(k0) / 4.0) * (2.0 * double(k1) / 4.0));
        }));
  });

  criterion(9, "elliptic application", 300.0, [](Outcome& o) {
    const GridSpec g(2, 1);
    const double eps = 1e-3;
    const std::vector<FourierMode> omega{{cplx(2.0), {0}}, {cplx(0, -0.5), {1}}, {cplx(0, 0.5), {-1}}};
    const BlockEncoding be = elliptic_encoding(omega, g, eps);
    // u - (omega u')' with omega = 2 + sin(2 pi x).
    const DenseOperator ref = quantize_1d(4, [](double x, std::int64_t xi) {
      const double k = double(xi);
      return 1.0 + 4 * kPi * kPi * cplx((2 + std::sin(2 * kPi * x)) * k * k, -k * std::cos(2 * kPi * x));
    });
    const double gamma = 1.0 + 4 * kPi * kPi * (4.0 * 1.0 + 16.0 * 1.0 * 3.0);
    const double d = defect(be, ref);
    o.check(std::abs(be.gamma - gamma) <= 1e-9 * gamma, "gamma");
    o.check(std::abs(gamma - (1 + 208 * kPi * kPi)) <= 1e-9 * gamma, "gamma formula");
    o.check(d <= (1 + gamma) * eps, "defect");
    o.detail << "gamma " << be.gamma << ", defect " << fmt(d) << " <= " << fmt((1 + gamma) * eps);
  });

  criterion(10, "inverse application", 600.0, [](Outcome& o) {
    const GridSpec g(3, 1);
    const double eps = 1e-2, P = 8.0;
    const ExpSumApprox terms = inv_elliptic_terms(1, P, eps);
    double sample_err = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double y = -P / 2 + P * i / 9999.0;
      double s = 0.0;
      for (std::size_t m = 0; m < terms.size(); ++m) s += terms.weights[m] * std::exp(-terms.exponents[m] * y * y);
      sample_err = std::max(sample_err, std::abs(1.0 / (1.0 + y * y) - s));
    }
    o.check(sample_err <= eps, "exponential sum");

    const BlockEncoding be = radial_multiplier_inverse_encoding(g, eps);
    std::vector<cplx> inv(8);
    for (int k = 0; k < 8; ++k) {
      const double f = double(k >= 4 ? k - 8 : k);
      inv[k] = 1.0 / (1.0 + f * f);
    }
    const DenseOperator F = direct_dft(8);
    const double d = defect(be, F * diag_of(inv) * dagger(F));
    o.check(d <= 2 * eps, "block");
    double weight = 0.0;
    for (double w : terms.weights) weight += std::abs(w);
    o.check(std::abs(be.gamma - weight) <= 1e-12 && be.gamma <= 1 + eps, "gamma");

    const ExpSumApprox half = inv_elliptic_terms(1, P, eps / 2);
    const double m_ratio = double(half.size()) / double(terms.size());
    const double a_ratio = half.max_exponent() / terms.max_exponent();
    o.check(m_ratio <= 3.0 && a_ratio <= 3.0, "growth under halving");
    o.detail << "sampled err " << fmt(sample_err) << ", block defect " << fmt(d) << ", gamma " << be.gamma
             << ", M " << terms.size() << "->" << half.size() << ", max a " << fmt(terms.max_exponent()) << "->"
             << fmt(half.max_exponent());
  });

  criterion(11, "elementwise product circuit", 0, [](Outcome& o) {
    std::mt19937 rng(101);
    double state_dev = 0.0, prob_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const DenseOperator ua = random_unitary(8, rng), ub = random_unitary(8, rng);
      const auto em = elementwise_mult_circuit(ua, ub);
      const StateVector out = apply_circuit(em.circuit, basis_state(em.circuit.wire_count(), 0));
      StateVector post(8);
      for (int j = 0; j < 8; ++j) {
        std::int64_t idx = 0;
        for (int l = 0; l < 3; ++l)
          if ((j >> l) & 1) idx |= std::int64_t{1} << em.output_wires[l];
        post[j] = out[idx];
      }
      StateVector expect(8);
      for (int j = 0; j < 8; ++j) expect[j] = ua(j, 0) * ub(j, 0);
      const double c2 = expect.squaredNorm();
      prob_dev = std::max({prob_dev, std::abs(post.squaredNorm() - c2), std::abs(em.c * em.c - c2)});
      state_dev = std::max(state_dev, (post / post.norm() - expect / std::sqrt(c2)).cwiseAbs().maxCoeff());
    }
    o.check(state_dev <= 1e-12, "state");
    o.check(prob_dev <= 1e-10, "probability");
    o.detail << "state dev " << fmt(state_dev) << ", probability dev " << fmt(prob_dev);
  });

  criterion(12, "reference oracle consistency", 0, [](Outcome& o) {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> u(-1, 1);
    std::normal_distribution<double> n(0.0, 1.0);
    double apply_dev = 0.0, ident_dev = 0.0;
    for (int d = 1; d <= 2; ++d)
      for (int p = 1; p <= 4; ++p) {
        const GridSpec g(p, d);
        const double c1 = u(rng), c2 = u(rng), c3 = u(rng);
        const SpaceFunction a = [=](const std::vector<double>& x) {
          double s = c1 * x[0];
          if (x.size() > 1) s += c2 * x[1];
          return std::polar(1.0, 2 * kPi * s);
        };
        const FrequencyFunction b = [=](const std::vector<std::int64_t>& xi) {
          double r2 = 0.0;
          for (auto k : xi) r2 += double(k * k);
          return cplx(std::cos(c3 * double(xi[0])), 0.5 / (1.0 + r2));
        };
        const WrappedSymbol w = wrap_symbol(SeparableSymbol{a, b, 1.0, 1.5}, g);
        const DenseOperator A = dense_pdo_matrix(w);
        for (int trial = 0; trial < 5; ++trial) {
          std::vector<cplx> f(g.N());
          for (auto& z : f) z = cplx(n(rng), n(rng));
          const auto fast = apply_pdo_fft(w, f);
          const Eigen::VectorXcd ref = A * Eigen::Map<const Eigen::VectorXcd>(f.data(), f.size());
          for (std::int64_t k = 0; k < g.N(); ++k) apply_dev = std::max(apply_dev, std::abs(fast[k] - ref[k]));
        }
        // A = diag(alpha) F diag(beta) F^dagger, and the beta-only symbol is F diag(beta) F^dagger.
        std::vector<cplx> av(g.N()), bv(g.N());
        for (std::int64_t k = 0; k < g.N(); ++k) {
          auto c = g.unflatten(k);
          std::vector<double> x;
          for (auto v : c) x.push_back(double(v) / double(g.P()));
          for (auto& v : c) v = fold_frequency(v, g.P());
          av[k] = a(x);
          bv[k] = b(c);
        }
        const DenseOperator F = dft_matrix(g);
        ident_dev = std::max(ident_dev, max_abs(A - diag_of(av) * F * diag_of(bv) * dagger(F)));
        const WrappedSymbol mult =
            wrap_symbol(SeparableSymbol{[](auto&) { return cplx(1.0); }, b, 1.0, 1.5}, g);
        ident_dev = std::max(ident_dev, max_abs(dense_pdo_matrix(mult) - F * diag_of(bv) * dagger(F)));
      }
    o.check(apply_dev <= 1e-10, "fft apply");
    o.check(ident_dev <= 1e-12, "identities");
    o.detail << "fft apply dev " << fmt(apply_dev) << ", identity dev " << fmt(ident_dev);
  });

  return failures == 0 ? 0 : 1;
}
