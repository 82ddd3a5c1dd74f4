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


#include "pdoenc/simulate.hpp"

#include <algorithm>
#include <numeric>

#include "pdoenc/errors.hpp"

namespace pdoenc {
namespace {

using Index = std::int64_t;

struct ControlMask {
  Index mask = 0;
  Index value = 0;
};

ControlMask control_mask(const Gate& g) {
  ControlMask m;
  for (const auto& c : g.controls) {
    m.mask |= Index{1} << c.wire;
    if (c.on_one) m.value |= Index{1} << c.wire;
  }
  return m;
}

void apply_single(const Gate& g, StateVector& s) {
  const Eigen::Matrix2cd u = g.matrix2();
  const Index t = Index{1} << g.targets[0];
  const ControlMask cm = control_mask(g);
  const Index dim = s.size();
  const bool diagonal = u(0, 1) == cplx(0) && u(1, 0) == cplx(0);
  for (Index i = 0; i < dim; ++i) {
    if ((i & t) || (i & cm.mask) != cm.value) continue;
    const Index j = i | t;
    if (diagonal) {
      s[i] *= u(0, 0);
      s[j] *= u(1, 1);
    } else {
      const cplx a = s[i], b = s[j];
      s[i] = u(0, 0) * a + u(0, 1) * b;
      s[j] = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

void apply_oracle(const Gate& g, StateVector& s) {
  const ControlMask cm = control_mask(g);
  const auto& table = *g.table;
  const Index dim = s.size();
  for (Index i = 0; i < dim; ++i) {
    if ((i & cm.mask) != cm.value) continue;
    std::uint64_t in = 0;
    for (std::size_t k = 0; k < g.inputs.size(); ++k) in |= static_cast<std::uint64_t>((i >> g.inputs[k]) & 1) << k;
    const std::uint64_t v = table[in];
    Index flip = 0;
    for (std::size_t k = 0; k < g.targets.size(); ++k)
      if ((v >> k) & 1) flip |= Index{1} << g.targets[k];
    const Index j = i ^ flip;
    if (j > i) std::swap(s[i], s[j]);
  }
}

void apply_unitary(const Gate& g, StateVector& s) {
  const ControlMask cm = control_mask(g);
  const int k = static_cast<int>(g.targets.size());
  const Index sub = Index{1} << k;
  Index tmask = 0;
  std::vector<Index> offset(sub, 0);
  for (Index a = 0; a < sub; ++a)
    for (int l = 0; l < k; ++l)
      if ((a >> l) & 1) offset[a] |= Index{1} << g.targets[l];
  for (int l = 0; l < k; ++l) tmask |= Index{1} << g.targets[l];
  const DenseOperator& u = *g.matrix;
  Eigen::VectorXcd buf(sub), out(sub);
  const Index dim = s.size();
  for (Index i = 0; i < dim; ++i) {
    if ((i & tmask) || (i & cm.mask) != cm.value) continue;
    for (Index a = 0; a < sub; ++a) buf[a] = s[i | offset[a]];
    out.noalias() = u * buf;
    for (Index a = 0; a < sub; ++a) s[i | offset[a]] = out[a];
  }
}

}  // namespace

SimulationCaps& simulation_caps() {
  static SimulationCaps caps;
  return caps;
}

StateVector basis_state(int wires, std::int64_t index) {
  StateVector s = StateVector::Zero(Index{1} << wires);
  s[index] = 1.0;
  return s;
}

void apply_gate(const Gate& g, StateVector& s) {
  const ControlMask cm = control_mask(g);
  switch (g.kind) {
    case GateKind::Phase: {
      const cplx ph = std::polar(1.0, g.angle);
      for (Index i = 0; i < s.size(); ++i)
        if ((i & cm.mask) == cm.value) s[i] *= ph;
      break;
    }
    case GateKind::Swap: {
      const Index a = Index{1} << g.targets[0], b = Index{1} << g.targets[1];
      for (Index i = 0; i < s.size(); ++i)
        if ((i & a) && !(i & b) && (i & cm.mask) == cm.value) std::swap(s[i], s[i ^ a ^ b]);
      break;
    }
    case GateKind::Oracle:
      apply_oracle(g, s);
      break;
    case GateKind::Unitary:
      apply_unitary(g, s);
      break;
    default:
      apply_single(g, s);
  }
}

StateVector apply_circuit(const Circuit& c, const StateVector& s) {
  if (c.wire_count() > 62 || s.size() != (Index{1} << c.wire_count()))
    throw DimensionMismatch("state dimension does not match circuit width");
  if (c.wire_count() > simulation_caps().state_wires)
    throw ResourceError("circuit has " + std::to_string(c.wire_count()) +
                        " wires, above the state-vector cap of " +
                        std::to_string(simulation_caps().state_wires));
  StateVector out = s;
  for (const auto& g : c.gates()) apply_gate(g, out);
  out *= c.global_phase();
  return out;
}

DenseOperator circuit_unitary(const Circuit& c) {
  if (c.wire_count() > simulation_caps().dense_wires)
    throw ResourceError("circuit has " + std::to_string(c.wire_count()) +
                        " wires, above the dense cap of " +
                        std::to_string(simulation_caps().dense_wires));
  const Index dim = Index{1} << c.wire_count();
  DenseOperator u(dim, dim);
  for (Index k = 0; k < dim; ++k) u.col(k) = apply_circuit(c, basis_state(c.wire_count(), k));
  return u;
}

std::vector<int> BlockEncoding::ancilla_wires() const {
  std::vector<int> out;
  for (int w = 0; w < circuit.wire_count(); ++w)
    if (std::find(output_wires.begin(), output_wires.end(), w) == output_wires.end())
      out.push_back(w);
  return out;
}

bool BlockEncoding::is_canonical() const {
  for (int j = 0; j < system_wires(); ++j)
    if (input_wires[j] != j || output_wires[j] != j) return false;
  return static_cast<int>(output_wires.size()) == system_wires();
}

BlockEncoding identity_encoding(int system_wires) {
  BlockEncoding be;
  be.circuit = Circuit(system_wires);
  be.hermitian = true;
  be.input_wires.resize(system_wires);
  std::iota(be.input_wires.begin(), be.input_wires.end(), 0);
  be.output_wires = be.input_wires;
  return be;
}

BlockEncoding canonicalize(const BlockEncoding& be) {
  if (be.is_canonical()) return be;
  const int n = be.system_wires();
  const int w = be.circuit.wire_count();
  if (static_cast<int>(be.output_wires.size()) != n)
    throw DimensionMismatch("input and output system registers differ in size");

  // dest[src]: where the content now on wire src must end up.
  std::vector<int> dest(w, -1);
  std::vector<bool> taken(w, false);
  for (int j = 0; j < n; ++j) {
    dest[be.output_wires[j]] = be.input_wires[j];
    taken[be.input_wires[j]] = true;
  }
  for (int src = 0; src < w; ++src)
    if (dest[src] < 0 && !taken[src]) {
      dest[src] = src;
      taken[src] = true;
    }
  int next = 0;
  for (int src = 0; src < w; ++src) {
    if (dest[src] >= 0) continue;
    while (taken[next]) ++next;
    dest[src] = next;
    taken[next] = true;
  }

  Circuit c = be.circuit;
  // holder[t]: the original wire whose content sits on wire t.
  std::vector<int> holder(w), where(w);
  std::iota(holder.begin(), holder.end(), 0);
  std::iota(where.begin(), where.end(), 0);
  for (int src = 0; src < w; ++src) {
    const int t = dest[src];
    const int cur = where[src];
    if (cur == t) continue;
    c.add(swap_gate(cur, t));
    const int other = holder[t];
    std::swap(holder[cur], holder[t]);
    where[src] = t;
    where[other] = cur;
  }

  // Relabel so the system register occupies [0, n).
  std::vector<int> map(w, -1);
  for (int j = 0; j < n; ++j) map[be.input_wires[j]] = j;
  int slot = n;
  for (int v = 0; v < w - be.workspace; ++v)
    if (map[v] < 0) map[v] = slot++;
  for (int v = w - be.workspace; v < w; ++v) {
    if (map[v] >= 0) throw ContractViolation("system wire inside the workspace block");
    map[v] = slot++;
  }
  BlockEncoding out = be;
  out.circuit = Circuit(w);
  out.circuit.append(c, map);
  std::iota(out.input_wires.begin(), out.input_wires.end(), 0);
  out.output_wires = out.input_wires;
  return out;
}

namespace {

Index embed_system(const std::vector<int>& wires, Index k) {
  Index idx = 0;
  for (std::size_t j = 0; j < wires.size(); ++j)
    if ((k >> j) & 1) idx |= Index{1} << wires[j];
  return idx;
}

}  // namespace

StateVector projected_output(const BlockEncoding& be, const StateVector& input) {
  const int n = be.system_wires();
  const Index dim = Index{1} << n;
  if (input.size() != dim) throw DimensionMismatch("input does not match system register");
  StateVector full = StateVector::Zero(Index{1} << be.circuit.wire_count());
  for (Index k = 0; k < dim; ++k) full[embed_system(be.input_wires, k)] = input[k];
  const StateVector after = apply_circuit(be.circuit, full);
  StateVector out(dim);
  for (Index l = 0; l < dim; ++l) out[l] = after[embed_system(be.output_wires, l)];
  return out;
}

DenseOperator extract_block(const BlockEncoding& be) {
  const Index dim = Index{1} << be.system_wires();
  DenseOperator block(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    StateVector e = StateVector::Zero(dim);
    e[k] = 1.0;
    block.col(k) = projected_output(be, e);
  }
  return block;
}

double success_probability(const BlockEncoding& be, const StateVector& input) {
  if (std::abs(input.norm() - 1.0) > 1e-10) throw ContractViolation("input state is not normalized");
  return projected_output(be, input).squaredNorm();
}

}  // namespace pdoenc
