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


#include "pdoenc/pdo.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

#include "fftw_lock.hpp"
#include "pdoenc/errors.hpp"

namespace pdoenc {
namespace {

constexpr double kBoundSlack = 1e-12;

std::vector<double> space_point(const GridSpec& grid, std::int64_t x) {
  const auto k = grid.unflatten(x);
  std::vector<double> out(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) out[j] = static_cast<double>(k[j]) / static_cast<double>(grid.P());
  return out;
}

std::vector<std::int64_t> folded_frequency(const GridSpec& grid, std::int64_t xi) {
  auto k = grid.unflatten(xi);
  for (auto& v : k) v = fold_frequency(v, grid.P());
  return k;
}

void check_bound(double value, double bound, const char* what) {
  if (value > bound * (1.0 + kBoundSlack) + kBoundSlack)
    throw ContractViolation(std::string(what) + " exceeds its declared bound: " + std::to_string(value) +
                            " > " + std::to_string(bound));
}

// exp(2 pi i x.xi / P) via the exponent modulo P.
class PhaseTable {
 public:
  explicit PhaseTable(const GridSpec& grid) : grid_(grid), roots_(grid.P()) {
    for (std::int64_t m = 0; m < grid.P(); ++m)
      roots_[m] = std::polar(1.0, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(grid.P()));
  }
  cplx operator()(std::int64_t x, std::int64_t xi) const {
    const auto a = grid_.unflatten(x), b = grid_.unflatten(xi);
    std::int64_t m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = (m + a[k] * b[k]) % grid_.P();
    return roots_[m];
  }

 private:
  GridSpec grid_;
  std::vector<cplx> roots_;
};

std::vector<cplx> fft(const std::vector<cplx>& in, const GridSpec& grid, int sign) {
  if (static_cast<std::int64_t>(in.size()) != grid.N()) throw DimensionMismatch("vector length is not P^d");
  std::vector<cplx> out(in);
  std::vector<int> dims(grid.d, static_cast<int>(grid.P()));
  auto* data = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft(grid.d, dims.data(), data, data, sign, FFTW_ESTIMATE);
  }
  // FFTW_ESTIMATE leaves the input untouched, so the copy can be planned in place.
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

void wrap_simple(const SimpleSymbol& s, const GridSpec& grid, cplx coeff, WrappedSymbol& out, bool& dense) {
  const std::int64_t N = grid.N();
  if (const auto* sep = std::get_if<SeparableSymbol>(&s)) {
    std::vector<cplx> a(N), b(N);
    for (std::int64_t x = 0; x < N; ++x) {
      a[x] = sep->alpha(space_point(grid, x));
      check_bound(std::abs(a[x]), sep->alpha_bound, "|alpha|");
    }
    for (std::int64_t xi = 0; xi < N; ++xi) {
      b[xi] = sep->beta(folded_frequency(grid, xi));
      check_bound(std::abs(b[xi]), sep->beta_bound, "|beta|");
    }
    out.y.push_back(coeff);
    out.alpha.push_back(std::move(a));
    out.beta.push_back(std::move(b));
    return;
  }
  if (const auto* fs = std::get_if<FullySeparableSymbol>(&s)) {
    if (static_cast<int>(fs->alpha.size()) != grid.d || static_cast<int>(fs->beta.size()) != grid.d)
      throw DimensionMismatch("fully separable symbol needs d factors on each side");
    for (const auto& f : fs->alpha) check_factor_parity(f, 1.0);
    for (const auto& f : fs->beta) check_factor_parity(f, static_cast<double>(grid.P()));
    std::vector<cplx> a(N), b(N);
    for (std::int64_t x = 0; x < N; ++x) {
      const auto pt = space_point(grid, x);
      cplx v = 1.0;
      for (int k = 0; k < grid.d; ++k) {
        const cplx fk = fs->alpha[k](pt[k]);
        check_bound(std::abs(fk), fs->alpha[k].kind == Factor::Kind::Exponential ? 1.0 : fs->alpha[k].bound, "|alpha_k|");
        v *= fk;
      }
      a[x] = v;
    }
    for (std::int64_t xi = 0; xi < N; ++xi) {
      const auto fr = folded_frequency(grid, xi);
      cplx v = 1.0;
      for (int k = 0; k < grid.d; ++k) {
        const cplx fk = fs->beta[k](static_cast<double>(fr[k]));
        check_bound(std::abs(fk), fs->beta[k].kind == Factor::Kind::Exponential ? 1.0 : fs->beta[k].bound, "|beta_k|");
        v *= fk;
      }
      b[xi] = v;
    }
    out.y.push_back(coeff);
    out.alpha.push_back(std::move(a));
    out.beta.push_back(std::move(b));
    return;
  }
  const auto& gen = std::get<GenericSymbol>(s);
  if (N > (std::int64_t{1} << 10)) throw ResourceError("generic symbol table above 2^10 x 2^10 entries");
  if (out.table.empty()) out.table.assign(N * N, 0.0);
  for (std::int64_t x = 0; x < N; ++x) {
    const auto pt = space_point(grid, x);
    for (std::int64_t xi = 0; xi < N; ++xi) {
      const cplx v = gen.a(pt, folded_frequency(grid, xi));
      check_bound(std::abs(v), gen.bound, "|a|");
      out.table[xi + N * x] += coeff * v;
    }
  }
  dense = true;
}

}  // namespace

GenericSymbol GenericSymbol::from_table(const GridSpec& grid, std::vector<cplx> values, double bound) {
  const std::int64_t N = grid.N();
  if (static_cast<std::int64_t>(values.size()) != N * N) throw DimensionMismatch("symbol table must have N^2 entries");
  GenericSymbol s;
  s.bound = bound;
  auto table = std::make_shared<const std::vector<cplx>>(std::move(values));
  s.a = [grid, table](const std::vector<double>& x, const std::vector<std::int64_t>& xi) {
    const std::int64_t P = grid.P();
    std::vector<std::int64_t> xk(x.size()), fk(xi.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      xk[k] = ((std::llround(x[k] * static_cast<double>(P)) % P) + P) % P;
      fk[k] = ((xi[k] % P) + P) % P;
    }
    return (*table)[grid.flatten(fk) + grid.N() * grid.flatten(xk)];
  };
  return s;
}

Factor Factor::even(RealFunction g, double bound) {
  Factor f;
  f.kind = Kind::Even;
  f.g = std::move(g);
  f.bound = bound;
  return f;
}

Factor Factor::odd(RealFunction g, double bound) {
  Factor f;
  f.kind = Kind::Odd;
  f.g = std::move(g);
  f.bound = bound;
  return f;
}

Factor Factor::exponential(double theta) {
  Factor f;
  f.kind = Kind::Exponential;
  f.theta = theta;
  return f;
}

cplx Factor::operator()(double y) const {
  if (kind == Kind::Exponential) return std::polar(1.0, theta * y);
  return g(y);
}

const char* to_string(Factor::Kind kind) {
  switch (kind) {
    case Factor::Kind::Even: return "even";
    case Factor::Kind::Odd: return "odd";
    case Factor::Kind::Exponential: return "exponential";
  }
  return "?";
}

void check_factor_parity(const Factor& f, double half_width) {
  if (f.kind == Factor::Kind::Exponential) return;
  if (!f.g) throw ContractViolation("factor has no payload");
  const double sign = f.kind == Factor::Kind::Even ? 1.0 : -1.0;
  const int samples = 257;
  for (int k = 0; k < samples; ++k) {
    const double y = half_width * k / (samples - 1);
    const double a = f.g(y), b = f.g(-y);
    if (std::abs(b - sign * a) > 1e-10 * std::max(1.0, std::abs(a)))
      throw ContractViolation(std::string("factor tagged ") + to_string(f.kind) + " fails the symmetry check at y = " +
                              std::to_string(y));
  }
}

cplx evaluate(const SimpleSymbol& s, const std::vector<double>& x, const std::vector<std::int64_t>& xi) {
  if (const auto* g = std::get_if<GenericSymbol>(&s)) return g->a(x, xi);
  if (const auto* sep = std::get_if<SeparableSymbol>(&s)) return sep->alpha(x) * sep->beta(xi);
  const auto& fs = std::get<FullySeparableSymbol>(s);
  cplx v = 1.0;
  for (std::size_t k = 0; k < fs.alpha.size(); ++k) v *= fs.alpha[k](x[k]);
  for (std::size_t k = 0; k < fs.beta.size(); ++k) v *= fs.beta[k](static_cast<double>(xi[k]));
  return v;
}

cplx evaluate(const SymbolSpec& s, const std::vector<double>& x, const std::vector<std::int64_t>& xi) {
  return std::visit(
      [&](const auto& v) -> cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearCombination>) {
          cplx sum = 0.0;
          for (std::size_t j = 0; j < v.terms.size(); ++j) sum += v.y[j] * evaluate(v.terms[j], x, xi);
          return sum;
        } else {
          return evaluate(SimpleSymbol(v), x, xi);
        }
      },
      s);
}

cplx WrappedSymbol::operator()(std::int64_t x, std::int64_t xi) const {
  if (!table.empty()) return table[xi + grid.N() * x];
  cplx v = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) v += y[j] * alpha[j][x] * beta[j][xi];
  return v;
}

double WrappedSymbol::sup_abs() const {
  double m = 0.0;
  for (std::int64_t x = 0; x < grid.N(); ++x)
    for (std::int64_t xi = 0; xi < grid.N(); ++xi) m = std::max(m, std::abs((*this)(x, xi)));
  return m;
}

WrappedSymbol wrap_symbol(const SymbolSpec& s, const GridSpec& grid) {
  WrappedSymbol out;
  out.grid = grid;
  bool dense = false;
  if (const auto* lc = std::get_if<LinearCombination>(&s)) {
    if (lc->y.size() != lc->terms.size()) throw DimensionMismatch("coefficient and term counts differ");
    if (lc->terms.empty()) throw ContractViolation("empty linear combination");
    for (std::size_t j = 0; j < lc->terms.size(); ++j) wrap_simple(lc->terms[j], grid, lc->y[j], out, dense);
  } else {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (!std::is_same_v<T, LinearCombination>) wrap_simple(SimpleSymbol(v), grid, 1.0, out, dense);
        },
        s);
  }
  if (dense && !out.alpha.empty()) {
    // Mixed combination: fold the separable terms into the table.
    const std::int64_t N = grid.N();
    for (std::size_t j = 0; j < out.y.size(); ++j)
      for (std::int64_t x = 0; x < N; ++x)
        for (std::int64_t xi = 0; xi < N; ++xi) out.table[xi + N * x] += out.y[j] * out.alpha[j][x] * out.beta[j][xi];
    out.y.clear();
    out.alpha.clear();
    out.beta.clear();
  }
  return out;
}

std::vector<cplx> dft_coefficients(const std::vector<cplx>& f, const GridSpec& grid) {
  auto out = fft(f, grid, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(grid.N());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<cplx> inverse_dft_coefficients(const std::vector<cplx>& fhat, const GridSpec& grid) {
  return fft(fhat, grid, FFTW_BACKWARD);
}

DenseOperator dense_pdo_matrix(const WrappedSymbol& w) {
  const std::int64_t N = w.grid.N();
  if (N > (std::int64_t{1} << 12)) throw ResourceError("dense PDO matrix limited to P^d <= 2^12");
  const PhaseTable phase(w.grid);
  DenseOperator g(N, N), e(N, N);
  for (std::int64_t x = 0; x < N; ++x)
    for (std::int64_t xi = 0; xi < N; ++xi) {
      const cplx ph = phase(x, xi);
      g(x, xi) = w(x, xi) * ph;
      e(xi, x) = std::conj(ph);
    }
  return g * e / static_cast<double>(N);
}

std::vector<cplx> apply_pdo_fft(const WrappedSymbol& w, const std::vector<cplx>& f) {
  if (!w.separable()) throw ContractViolation("fast application needs separable structure");
  const std::int64_t N = w.grid.N();
  if (static_cast<std::int64_t>(f.size()) != N) throw DimensionMismatch("input length is not P^d");
  const auto fhat = dft_coefficients(f, w.grid);
  std::vector<cplx> out(N, 0.0), tmp(N);
  for (std::size_t j = 0; j < w.y.size(); ++j) {
    for (std::int64_t xi = 0; xi < N; ++xi) tmp[xi] = w.beta[j][xi] * fhat[xi];
    const auto back = inverse_dft_coefficients(tmp, w.grid);
    for (std::int64_t x = 0; x < N; ++x) out[x] += w.y[j] * w.alpha[j][x] * back[x];
  }
  return out;
}

LinearCombination elliptic_symbol(const std::vector<FourierMode>& omega, const GridSpec& grid) {
  const int d = grid.d;
  const double P = static_cast<double>(grid.P());
  const double four_pi2 = 4.0 * kPi * kPi;
  LinearCombination lc;
  lc.y.push_back(1.0);
  lc.terms.push_back(FullySeparableSymbol{std::vector<Factor>(d, Factor::one()), std::vector<Factor>(d, Factor::one())});

  auto x_factors = [&](const FourierMode& m) {
    if (static_cast<int>(m.q.size()) != d) throw DimensionMismatch("mode q must have d entries");
    std::vector<Factor> a;
    for (int k = 0; k < d; ++k) a.push_back(Factor::exponential(2.0 * kPi * static_cast<double>(m.q[k])));
    return a;
  };
  const Factor linear = Factor::odd([P](double xi) { return xi / P; }, 1.0);
  const Factor square = Factor::even([P](double xi) { return xi * xi / (P * P); }, 1.0);
  for (const auto& m : omega)
    for (int l = 0; l < d; ++l) {
      std::vector<Factor> b(d, Factor::one());
      b[l] = linear;
      lc.y.push_back(four_pi2 * P * static_cast<double>(m.q.at(l)) * m.c);
      lc.terms.push_back(FullySeparableSymbol{x_factors(m), b});
    }
  for (const auto& m : omega)
    for (int l = 0; l < d; ++l) {
      std::vector<Factor> b(d, Factor::one());
      b[l] = square;
      lc.y.push_back(four_pi2 * P * P * m.c);
      lc.terms.push_back(FullySeparableSymbol{x_factors(m), b});
    }
  return lc;
}

cplx elliptic_symbol_value(const std::vector<FourierMode>& omega, const std::vector<double>& x,
                           const std::vector<std::int64_t>& xi) {
  double xi2 = 0.0;
  for (auto v : xi) xi2 += static_cast<double>(v * v);
  cplx sum = 1.0;
  for (const auto& m : omega) {
    double qx = 0.0, qxi = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      qx += static_cast<double>(m.q[k]) * x[k];
      qxi += static_cast<double>(m.q[k] * xi[k]);
    }
    sum += 4.0 * kPi * kPi * m.c * std::polar(1.0, 2.0 * kPi * qx) * (qxi + xi2);
  }
  return sum;
}

double elliptic_gamma(const std::vector<FourierMode>& omega, const GridSpec& grid) {
  const double P = static_cast<double>(grid.P());
  double first = 0.0, second = 0.0;
  for (const auto& m : omega) {
    double q1 = 0.0;
    for (auto v : m.q) q1 += std::abs(static_cast<double>(v));
    first += std::abs(m.c) * q1;
    second += std::abs(m.c);
  }
  return 1.0 + 4.0 * kPi * kPi * (P * first + P * P * grid.d * second);
}

std::string dump_symbol(const WrappedSymbol& w) {
  std::ostringstream os;
  os << "# x xi re im (P = " << w.grid.P() << ", d = " << w.grid.d << ")\n" << std::setprecision(17);
  for (std::int64_t x = 0; x < w.grid.N(); ++x)
    for (std::int64_t xi = 0; xi < w.grid.N(); ++xi) {
      const cplx v = w(x, xi);
      os << x << ' ' << xi << ' ' << v.real() << ' ' << v.imag() << '\n';
    }
  return os.str();
}

}  // namespace pdoenc
