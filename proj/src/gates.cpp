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


#include "pdoenc/gates.hpp"

#include <cmath>

#include "pdoenc/errors.hpp"

namespace pdoenc {
namespace {

int qubits_for(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw DimensionMismatch("dimension is not a power of two");
  return n;
}

}  // namespace

Gate phase_rotation(int target, int j) {
  return rz_gate(target, 2.0 * kPi / std::ldexp(1.0, j));
}

Circuit qft_circuit(int p) {
  if (p < 1) throw ContractViolation("qft needs p >= 1");
  Circuit c(p);
  for (int q = p - 1; q >= 0; --q) {
    c.add(h_gate(q));
    for (int l = q - 1; l >= 0; --l)
      c.add(with_controls(phase_rotation(q, q - l + 1), {{l, true}}));
  }
  for (int i = 0; i < p / 2; ++i) c.add(swap_gate(i, p - 1 - i));
  return c;
}

Circuit inverse_qft_circuit(int p) { return qft_circuit(p).inverse(); }

Circuit phase_mult_circuit(int p) {
  if (p < 1) throw ContractViolation("phase multiplication needs p >= 1");
  Circuit c(2 * p);
  for (int j = 0; j < p; ++j)
    for (int k = 0; j + k < p; ++k)
      c.add(with_controls(phase_rotation(p + j, p - j - k), {{k, true}}));
  return c;
}

Circuit phase_mult_circuit_naive(int p) {
  Circuit c(2 * p);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k)
      c.add(with_controls(rz_gate(p + j, 2.0 * kPi * std::ldexp(1.0, j + k - p)), {{k, true}}));
  return c;
}

Circuit phase_mult_multidim(int p, int d) {
  if (d < 1) throw ContractViolation("phase multiplication needs d >= 1");
  const Circuit one = phase_mult_circuit(p);
  Circuit c(2 * p * d);
  for (int k = 0; k < d; ++k) {
    std::vector<int> map(2 * p);
    for (int b = 0; b < p; ++b) {
      map[b] = k * p + b;              // xi_k
      map[p + b] = p * d + k * p + b;  // x_k
    }
    c.append(one, map);
  }
  return c;
}

void append_cr_phi(Circuit& c, int signal, const std::vector<int>& flags, double phi) {
  std::vector<Control> open;
  for (int w : flags) open.push_back({w, false});
  c.add(with_controls(x_gate(signal), open));
  c.add(zexp_gate(signal, -phi));
  c.add(with_controls(x_gate(signal), open));
}

Circuit cr_phi_gate(double phi) {
  if (!(phi >= -kPi && phi <= kPi)) throw ContractViolation("CR_phi angle outside [-pi, pi]");
  Circuit c(2);
  append_cr_phi(c, 1, {0}, phi);
  return c;
}

ElementwiseProduct elementwise_mult_circuit(const DenseOperator& ua, const DenseOperator& ub) {
  if (ua.rows() != ub.rows() || ua.cols() != ub.cols())
    throw DimensionMismatch("U_a and U_b differ in size");
  const int n = qubits_for(ua.rows());
  if (!is_unitary(ua, 1e-10) || !is_unitary(ub, 1e-10))
    throw ContractViolation("elementwise multiplication needs unitary inputs");

  ElementwiseProduct out;
  out.c = std::sqrt((ua.col(0).array() * ub.col(0).array()).abs2().sum());
  if (out.c < 1e-14) throw ContractViolation("degenerate element-wise product: c = 0");

  out.circuit = Circuit(2 * n);
  std::vector<int> a(n), b(n);
  for (int l = 0; l < n; ++l) {
    a[l] = l;
    b[l] = n + l;
  }
  out.circuit.add(unitary_gate("U_a", a, ua));
  out.circuit.add(unitary_gate("U_b", b, ub));
  for (int l = 0; l < n; ++l) out.circuit.add(with_controls(x_gate(b[l]), {{a[l], true}}));
  out.output_wires = a;
  out.postselect_wires = b;
  return out;
}

}  // namespace pdoenc
