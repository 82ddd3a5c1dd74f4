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


#include "pdoenc/linalg.hpp"

#include <cmath>

#include "pdoenc/errors.hpp"

namespace pdoenc {

GridSpec::GridSpec(int p_, int d_) : p(p_), d(d_) {
  if (p < 1 || d < 1) throw ContractViolation("grid needs p >= 1 and d >= 1");
  if (p * d > 30) throw ResourceError("grid too large");
}

std::vector<std::int64_t> GridSpec::unflatten(std::int64_t index) const {
  std::vector<std::int64_t> coords(d);
  for (int k = 0; k < d; ++k) coords[k] = (index >> (k * p)) & (P() - 1);
  return coords;
}

std::int64_t GridSpec::flatten(const std::vector<std::int64_t>& coords) const {
  if (static_cast<int>(coords.size()) != d)
    throw DimensionMismatch("coordinate count differs from d");
  std::int64_t index = 0;
  for (int k = 0; k < d; ++k) index |= (coords[k] & (P() - 1)) << (k * p);
  return index;
}

std::int64_t fold_frequency(std::int64_t xi, std::int64_t P) {
  return 2 * xi >= P ? xi - P : xi;
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DenseOperator dagger(const DenseOperator& a) { return a.adjoint(); }

DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("compose: inner dimensions differ");
  return a * b;
}

DenseOperator dft_matrix(std::int64_t N) {
  DenseOperator f(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (std::int64_t j = 0; j < N; ++j)
    for (std::int64_t k = 0; k < N; ++k)
      f(j, k) = scale * std::polar(1.0, 2.0 * kPi * static_cast<double>((j * k) % N) / N);
  return f;
}

DenseOperator dft_matrix(const GridSpec& grid) {
  DenseOperator f = dft_matrix(grid.P());
  DenseOperator out = f;
  for (int k = 1; k < grid.d; ++k) out = tensor(f, out);
  return out;
}

bool is_unitary(const DenseOperator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  DenseOperator g = u.adjoint() * u;
  g -= DenseOperator::Identity(u.rows(), u.cols());
  return max_abs(g) <= tol;
}

double max_abs(const DenseOperator& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double spectral_norm(const DenseOperator& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseOperator> svd(a);
  return svd.singularValues()(0);
}

}  // namespace pdoenc
