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


#include "pdoenc/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pdoenc/errors.hpp"
#include "pdoenc/gates.hpp"

namespace pdoenc {
namespace {

int flag_count(const BlockEncoding& be) {
  return be.circuit.wire_count() - be.system_wires() - be.workspace;
}

// Wire map placing a canonical encoding's system, flag and workspace blocks
// at the given bases of a larger circuit.
std::vector<int> placement(const BlockEncoding& be, int sys_base, int flag_base, int ws_base) {
  const int n = be.system_wires();
  const int f = flag_count(be);
  std::vector<int> map(be.circuit.wire_count());
  for (int j = 0; j < n; ++j) map[j] = sys_base + j;
  for (int j = 0; j < f; ++j) map[n + j] = flag_base + j;
  for (int j = 0; j < be.workspace; ++j) map[n + f + j] = ws_base + j;
  return map;
}

BlockEncoding make_canonical(Circuit c, int n, int workspace) {
  BlockEncoding be;
  be.circuit = std::move(c);
  be.input_wires.resize(n);
  std::iota(be.input_wires.begin(), be.input_wires.end(), 0);
  be.output_wires = be.input_wires;
  be.workspace = workspace;
  return be;
}

int index_wires_for(std::size_t m) {
  int b = 1;
  while ((std::size_t{1} << b) < m) ++b;
  return b;
}

BlockEncoding build_lcu(const PreparePair& pair, const std::vector<BlockEncoding>& raw) {
  if (raw.empty()) throw ContractViolation("lcu needs at least one encoding");
  if (raw.size() > (std::size_t{1} << pair.index_wires))
    throw DimensionMismatch("more encodings than index states");
  std::vector<BlockEncoding> encs;
  for (const auto& be : raw) encs.push_back(canonicalize(be));
  const int n = encs[0].system_wires();
  int flags = 0, ws = 0;
  for (const auto& be : encs) {
    if (be.system_wires() != n) throw DimensionMismatch("lcu encodings differ in system size");
    flags = std::max(flags, flag_count(be));
    ws = std::max(ws, be.workspace);
  }
  const int b = pair.index_wires;
  const int index_base = n + flags;
  const int ws_base = index_base + b;
  Circuit c(ws_base + ws);
  std::vector<int> index(b);
  std::iota(index.begin(), index.end(), index_base);

  c.add(unitary_gate("PREP_R", index, pair.ur));
  for (std::size_t j = 0; j < encs.size(); ++j) {
    std::vector<Control> sel;
    for (int l = 0; l < b; ++l) sel.push_back({index_base + l, ((j >> l) & 1) != 0});
    c.append_controlled(encs[j].circuit, placement(encs[j], 0, n, ws_base), sel);
  }
  c.add(unitary_gate("PREP_L_DAG", index, pair.ul.adjoint()));
  return make_canonical(std::move(c), n, ws);
}

}  // namespace

DenseOperator complete_unitary(const Eigen::VectorXcd& first_column) {
  const Eigen::Index dim = first_column.size();
  if (std::abs(first_column.norm() - 1.0) > 1e-10)
    throw ContractViolation("first column must be a unit vector");
  DenseOperator u(dim, dim);
  u.col(0) = first_column;
  Eigen::Index filled = 1;
  for (Eigen::Index k = 0; k < dim && filled < dim; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < filled; ++j) v -= u.col(j).dot(v) * u.col(j);
    const double nv = v.norm();
    if (nv < 1e-8) continue;
    u.col(filled++) = v / nv;
  }
  if (filled != dim) throw ContractViolation("unitary completion failed");
  return u;
}

PreparePair prepare_pair(const std::vector<cplx>& y, double beta) {
  if (y.empty()) throw ContractViolation("prepare_pair needs at least one coefficient");
  double l1 = 0.0;
  for (auto v : y) l1 += std::abs(v);
  if (l1 == 0.0) throw ContractViolation("prepare_pair rejects an all-zero coefficient vector");
  if (beta < l1 * (1.0 - 1e-12)) throw ContractViolation("beta is below |y|_1");

  PreparePair pp;
  pp.y = y;
  pp.beta = beta;
  const double rest = 1.0 - l1 / beta;
  // With beta > |y|_1 the leftover weight sits on two unused indices, one in
  // each column, so it never reaches the block.
  const bool pad = rest > 1e-15;
  pp.index_wires = index_wires_for(y.size() + (pad ? 2 : 0));
  const Eigen::Index dim = Eigen::Index{1} << pp.index_wires;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim), d = Eigen::VectorXcd::Zero(dim);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double mag = std::sqrt(std::abs(y[j]) / beta);
    c[j] = mag;
    d[j] = std::polar(mag, std::arg(y[j]));
  }
  if (pad) {
    c[dim - 1] = std::sqrt(rest);
    d[dim - 2] = std::sqrt(rest);
  }
  pp.ul = complete_unitary(c / c.norm());
  pp.ur = complete_unitary(d / d.norm());
  return pp;
}

PreparePair prepare_pair(const std::vector<cplx>& y) {
  double l1 = 0.0;
  for (auto v : y) l1 += std::abs(v);
  return prepare_pair(y, l1);
}

BlockEncoding lcu(const PreparePair& pair, const std::vector<BlockEncoding>& encodings) {
  if (encodings.size() < pair.y.size()) throw DimensionMismatch("fewer encodings than coefficients");
  const double alpha = encodings[0].gamma;
  double eps2 = 0.0;
  for (const auto& be : encodings) {
    if (std::abs(be.gamma - alpha) > 1e-12 * std::max(1.0, alpha))
      throw ContractViolation("lcu encodings must share a common scale; use lcu_weighted");
    eps2 = std::max(eps2, be.epsilon);
  }
  double eps1 = 0.0;
  for (std::size_t j = 0; j < pair.y.size(); ++j)
    eps1 += std::abs(pair.beta * std::conj(pair.ul(j, 0)) * pair.ur(j, 0) - pair.y[j]);
  std::vector<BlockEncoding> used(encodings.begin(), encodings.begin() + pair.y.size());
  BlockEncoding out = build_lcu(pair, used);
  out.gamma = alpha * pair.beta;
  out.epsilon = alpha * eps1 + pair.beta * eps2;
  return out;
}

BlockEncoding lcu_weighted(const std::vector<cplx>& y, const std::vector<BlockEncoding>& encodings) {
  if (encodings.size() != y.size()) throw DimensionMismatch("coefficient and encoding counts differ");
  std::vector<cplx> folded(y.size());
  double eps = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    folded[j] = y[j] * encodings[j].gamma;
    eps += std::abs(y[j]) * encodings[j].epsilon;
  }
  const PreparePair pair = prepare_pair(folded);
  BlockEncoding out = build_lcu(pair, encodings);
  out.gamma = pair.beta;
  out.epsilon = eps;
  return out;
}

BlockEncoding product(const BlockEncoding& be1_raw, const BlockEncoding& be2_raw) {
  const BlockEncoding be1 = canonicalize(be1_raw), be2 = canonicalize(be2_raw);
  if (be1.system_wires() != be2.system_wires())
    throw DimensionMismatch("product operands differ in system size");
  const int n = be1.system_wires();
  const int f1 = flag_count(be1), f2 = flag_count(be2);
  const int ws = std::max(be1.workspace, be2.workspace);
  Circuit c(n + f1 + f2 + ws);
  c.append(be2.circuit, placement(be2, 0, n + f1, n + f1 + f2));
  c.append(be1.circuit, placement(be1, 0, n, n + f1 + f2));
  BlockEncoding out = make_canonical(std::move(c), n, ws);
  out.gamma = be1.gamma * be2.gamma;
  out.epsilon = be1.gamma * be2.epsilon + be2.gamma * be1.epsilon;
  return out;
}

BlockEncoding tensor_encodings(const std::vector<BlockEncoding>& raw) {
  if (raw.empty()) throw ContractViolation("tensor_encodings needs a nonempty list");
  std::vector<BlockEncoding> encs;
  int n = 0, flags = 0, ws = 0;
  for (const auto& be : raw) {
    encs.push_back(canonicalize(be));
    n += encs.back().system_wires();
    flags += flag_count(encs.back());
    ws = std::max(ws, encs.back().workspace);
  }
  Circuit c(n + flags + ws);
  int sys_base = 0, flag_base = n;
  double gamma = 1.0;
  bool hermitian = true;
  for (const auto& be : encs) {
    c.append(be.circuit, placement(be, sys_base, flag_base, n + flags));
    sys_base += be.system_wires();
    flag_base += flag_count(be);
    gamma *= be.gamma;
    hermitian = hermitian && be.hermitian;
  }
  double eps = 0.0;
  for (std::size_t k = 0; k < encs.size(); ++k) {
    double others = 1.0;
    for (std::size_t j = 0; j < encs.size(); ++j)
      if (j != k) others *= encs[j].gamma;
    eps += others * encs[k].epsilon;
  }
  BlockEncoding out = make_canonical(std::move(c), n, ws);
  out.gamma = gamma;
  out.epsilon = eps;
  out.hermitian = hermitian;
  return out;
}

BlockEncoding conjugate_by_qft(const BlockEncoding& raw, int d) {
  const BlockEncoding be = canonicalize(raw);
  const int n = be.system_wires();
  if (d < 1 || n % d != 0) throw DimensionMismatch("system wires are not p * d");
  const int p = n / d;
  const Circuit f = qft_circuit(p), finv = inverse_qft_circuit(p);
  Circuit c(be.circuit.wire_count());
  auto reg = [&](int k) {
    std::vector<int> m(p);
    std::iota(m.begin(), m.end(), k * p);
    return m;
  };
  for (int k = 0; k < d; ++k) c.append(finv, reg(k));
  c.append(be.circuit);
  for (int k = 0; k < d; ++k) c.append(f, reg(k));
  BlockEncoding out = be;
  out.circuit = std::move(c);
  return out;
}

BlockEncoding zero_encoding(int system_wires) {
  Circuit c(system_wires + 1);
  c.add(x_gate(system_wires));
  BlockEncoding out = make_canonical(std::move(c), system_wires, 0);
  out.hermitian = true;
  return out;
}

}  // namespace pdoenc
