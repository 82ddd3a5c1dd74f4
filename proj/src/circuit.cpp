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


#include "pdoenc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "pdoenc/errors.hpp"

namespace pdoenc {
namespace {

struct KindName {
  GateKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {GateKind::H, "H"},         {GateKind::X, "X"},         {GateKind::Z, "Z"},
    {GateKind::S, "S"},         {GateKind::Sdg, "SDG"},     {GateKind::Ry, "RY"},
    {GateKind::Rz, "RZ"},       {GateKind::ZExp, "ZEXP"},   {GateKind::Phase, "PHASE"},
    {GateKind::Swap, "SWAP"},   {GateKind::Oracle, "ORACLE"}, {GateKind::Unitary, "UNITARY"},
};

std::size_t expected_targets(GateKind kind) {
  switch (kind) {
    case GateKind::Phase:
      return 0;
    case GateKind::Swap:
      return 2;
    case GateKind::Oracle:
    case GateKind::Unitary:
      return static_cast<std::size_t>(-1);
    default:
      return 1;
  }
}

// Cost of a c-controlled single-qubit gate via the Barenco et al. recursion
// C^c(U) = C(V) C^{c-1}(X) C(V^dag) C^{c-1}(X) C^{c-1}(V).
std::int64_t controlled_cost(int c) {
  if (c <= 1) return 1;
  return 3 * controlled_cost(c - 1) + 2;
}

}  // namespace

std::string to_string(GateKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
  for (const auto& kn : kKindNames)
    if (name == kn.name) return kn.kind;
  throw ContractViolation("unknown gate kind '" + name + "'");
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::S:
      g.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      g.kind = GateKind::S;
      break;
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::ZExp:
    case GateKind::Phase:
      g.angle = -angle;
      break;
    case GateKind::Unitary:
      g.matrix = std::make_shared<const DenseOperator>(matrix->adjoint());
      break;
    default:
      break;  // self-inverse, including XOR oracles
  }
  return g;
}

std::int64_t Gate::elementary_cost() const {
  if (is_oracle_call()) return 0;
  const int c = static_cast<int>(controls.size());
  if (kind == GateKind::Phase) {
    // A controlled scalar phase is a (c-1)-controlled phase rotation.
    return c == 0 ? 0 : controlled_cost(c - 1);
  }
  if (kind == GateKind::Swap) return c == 0 ? 1 : 3 * controlled_cost(c + 1);
  return controlled_cost(c);
}

Eigen::Matrix2cd Gate::matrix2() const {
  Eigen::Matrix2cd m;
  const cplx i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H:
      m << r, r, r, -r;
      break;
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      break;
    case GateKind::S:
      m << 1, 0, 0, i;
      break;
    case GateKind::Sdg:
      m << 1, 0, 0, -i;
      break;
    case GateKind::Ry:
      m << std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2), std::cos(angle / 2);
      break;
    case GateKind::Rz:
      m << 1, 0, 0, std::polar(1.0, angle);
      break;
    case GateKind::ZExp:
      m << std::polar(1.0, angle), 0, 0, std::polar(1.0, -angle);
      break;
    default:
      throw ContractViolation("matrix2 requested for a multi-wire gate kind");
  }
  return m;
}

namespace {

Gate make_gate(GateKind kind, std::vector<int> targets) {
  Gate g;
  g.kind = kind;
  g.targets = std::move(targets);
  return g;
}

}  // namespace

Gate h_gate(int w) { return make_gate(GateKind::H, {w}); }
Gate x_gate(int w) { return make_gate(GateKind::X, {w}); }
Gate z_gate(int w) { return make_gate(GateKind::Z, {w}); }
Gate s_gate(int w) { return make_gate(GateKind::S, {w}); }
Gate sdg_gate(int w) { return make_gate(GateKind::Sdg, {w}); }

Gate ry_gate(int w, double theta) {
  Gate g = make_gate(GateKind::Ry, {w});
  g.angle = theta;
  return g;
}

Gate rz_gate(int w, double theta) {
  Gate g = make_gate(GateKind::Rz, {w});
  g.angle = theta;
  return g;
}

Gate zexp_gate(int w, double phi) {
  Gate g = make_gate(GateKind::ZExp, {w});
  g.angle = phi;
  return g;
}

Gate phase_gate(double phi) {
  Gate g = make_gate(GateKind::Phase, {});
  g.angle = phi;
  return g;
}

Gate swap_gate(int a, int b) { return make_gate(GateKind::Swap, {a, b}); }

Gate oracle_gate(std::string label, std::vector<int> inputs, std::vector<int> targets,
                 std::vector<std::uint64_t> table) {
  Gate g = make_gate(GateKind::Oracle, std::move(targets));
  g.inputs = std::move(inputs);
  g.label = std::move(label);
  g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  return g;
}

Gate unitary_gate(std::string label, std::vector<int> targets, DenseOperator matrix) {
  Gate g = make_gate(GateKind::Unitary, std::move(targets));
  g.label = std::move(label);
  g.matrix = std::make_shared<const DenseOperator>(std::move(matrix));
  return g;
}

Gate with_controls(Gate g, std::vector<Control> controls) {
  g.controls.insert(g.controls.end(), controls.begin(), controls.end());
  return g;
}

Circuit::Circuit(int wire_count) : wire_count_(wire_count) {
  if (wire_count < 0) throw ContractViolation("negative wire count");
}

void Circuit::set_global_phase(cplx phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12)
    throw ContractViolation("global phase must have unit modulus");
  global_phase_ = phase;
}

void Circuit::validate(const Gate& g) const {
  std::unordered_set<int> seen;
  auto use = [&](int w) {
    if (w < 0 || w >= wire_count_)
      throw ContractViolation(to_string(g.kind) + " gate wire " + std::to_string(w) +
                              " out of range");
    if (!seen.insert(w).second)
      throw ContractViolation(to_string(g.kind) + " gate reuses wire " + std::to_string(w));
  };
  for (int w : g.targets) use(w);
  for (const auto& c : g.controls) use(c.wire);
  for (int w : g.inputs) use(w);
  if (!std::isfinite(g.angle)) throw ContractViolation("non-finite gate angle");

  const std::size_t want = expected_targets(g.kind);
  if (want != static_cast<std::size_t>(-1) && g.targets.size() != want)
    throw ContractViolation(to_string(g.kind) + " gate has wrong target count");
  if (g.kind != GateKind::Oracle && !g.inputs.empty())
    throw ContractViolation("only oracle gates take input wires");

  if (g.kind == GateKind::Oracle) {
    if (!g.table || g.targets.empty() || g.targets.size() > 62 || g.inputs.size() > 30)
      throw ContractViolation("malformed oracle gate");
    if (g.table->size() != (std::size_t{1} << g.inputs.size()))
      throw ContractViolation("oracle table size must be 2^inputs");
    const std::uint64_t limit = std::uint64_t{1} << g.targets.size();
    for (auto v : *g.table)
      if (v >= limit) throw ContractViolation("oracle value exceeds target width");
  }
  if (g.kind == GateKind::Unitary) {
    const Eigen::Index dim = Eigen::Index{1} << g.targets.size();
    if (!g.matrix || g.targets.empty() || g.matrix->rows() != dim || g.matrix->cols() != dim)
      throw ContractViolation("unitary gate matrix has wrong shape");
    if (!is_unitary(*g.matrix, 1e-10)) throw ContractViolation("unitary gate is not unitary");
  }
}

void Circuit::add(Gate g) {
  validate(g);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other, const std::vector<int>& wire_map) {
  append_controlled(other, wire_map, {});
}

void Circuit::append(const Circuit& other) {
  std::vector<int> identity(other.wire_count());
  for (int i = 0; i < other.wire_count(); ++i) identity[i] = i;
  append(other, identity);
}

void Circuit::append_controlled(const Circuit& other, const std::vector<int>& wire_map,
                                const std::vector<Control>& controls) {
  if (static_cast<int>(wire_map.size()) != other.wire_count())
    throw DimensionMismatch("wire map size differs from appended circuit width");
  auto remap = [&](int w) { return wire_map[w]; };
  for (const auto& g0 : other.gates()) {
    Gate g = g0;
    for (int& w : g.targets) w = remap(w);
    for (int& w : g.inputs) w = remap(w);
    for (auto& c : g.controls) c.wire = remap(c.wire);
    g.controls.insert(g.controls.end(), controls.begin(), controls.end());
    add(std::move(g));
  }
  const cplx ph = other.global_phase();
  if (std::abs(ph - cplx(1.0, 0.0)) > 0.0) {
    if (controls.empty()) {
      global_phase_ *= ph;
    } else {
      add(with_controls(phase_gate(std::arg(ph)), controls));
    }
  }
}

Circuit Circuit::inverse() const {
  Circuit inv(wire_count_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(it->inverse());
  inv.global_phase_ = std::conj(global_phase_);
  return inv;
}

Circuit Circuit::widened(int wire_count) const {
  if (wire_count < wire_count_) throw ContractViolation("cannot narrow a circuit");
  Circuit c = *this;
  c.wire_count_ = wire_count;
  return c;
}

std::int64_t Circuit::elementary_gate_count() const {
  std::int64_t n = 0;
  for (const auto& g : gates_) n += g.elementary_cost();
  return n;
}

std::int64_t Circuit::oracle_call_count() const {
  return std::count_if(gates_.begin(), gates_.end(),
                       [](const Gate& g) { return g.is_oracle_call(); });
}

std::int64_t Circuit::count(GateKind kind, int min_controls) const {
  return std::count_if(gates_.begin(), gates_.end(), [&](const Gate& g) {
    return g.kind == kind && static_cast<int>(g.controls.size()) >= min_controls;
  });
}

}  // namespace pdoenc
