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


#include <gtest/gtest.h>

#include <random>

#include "pdoenc/circuit.hpp"
#include "pdoenc/combinators.hpp"
#include "pdoenc/errors.hpp"
#include "pdoenc/linalg.hpp"
#include "pdoenc/simulate.hpp"

using namespace pdoenc;

namespace {

DenseOperator hadamard() {
  DenseOperator h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

DenseOperator pauli_x() {
  DenseOperator x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

// Random circuit over the single-wire kinds plus controls and swaps.
Circuit random_circuit(int wires, int gates, std::mt19937& rng) {
  std::uniform_int_distribution<int> wire(0, wires - 1), kind(0, 8);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Circuit c(wires);
  for (int k = 0; k < gates; ++k) {
    const int t = wire(rng);
    Gate g;
    switch (kind(rng)) {
      case 0: g = h_gate(t); break;
      case 1: g = x_gate(t); break;
      case 2: g = s_gate(t); break;
      case 3: g = ry_gate(t, angle(rng)); break;
      case 4: g = rz_gate(t, angle(rng)); break;
      case 5: g = zexp_gate(t, angle(rng)); break;
      case 6: g = sdg_gate(t); break;
      case 7: {
        int u = wire(rng);
        if (u == t) u = (t + 1) % wires;
        g = swap_gate(t, u);
        break;
      }
      default: g = z_gate(t); break;
    }
    int cw = wire(rng);
    if (wires > 2 && std::find(g.targets.begin(), g.targets.end(), cw) == g.targets.end() && k % 3 == 0)
      g = with_controls(g, {{cw, k % 2 == 0}});
    c.add(g);
  }
  return c;
}

// Embeds a 2x2 matrix on wire t of an n-wire register via Kronecker products.
DenseOperator embed(const DenseOperator& m, int t, int n) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int w = n - 1; w >= 0; --w) out = tensor(out, w == t ? m : DenseOperator(DenseOperator::Identity(2, 2)));
  return out;
}

}  // namespace

TEST(Linalg, TensorOfIdentities) {
  EXPECT_TRUE(tensor(DenseOperator::Identity(2, 2), DenseOperator::Identity(2, 2)).isApprox(DenseOperator::Identity(4, 4)));
}

TEST(Linalg, DaggerOfS) {
  DenseOperator s(2, 2);
  s << 1, 0, 0, cplx(0, 1);
  DenseOperator expect(2, 2);
  expect << 1, 0, 0, cplx(0, -1);
  EXPECT_LT(max_abs(dagger(s) - expect), 1e-15);
}

TEST(Linalg, HadamardTensorXOnZero) {
  // tensor(H, X): H on wire 1, X on wire 0. |00> -> (|01> + |11>)/sqrt2.
  StateVector v = tensor(hadamard(), pauli_x()) * basis_state(2, 0);
  EXPECT_NEAR(std::abs(v[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[3] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[0]) + std::abs(v[2]), 0.0, 1e-15);
}

TEST(Linalg, GridFlattenRoundTrip) {
  for (int p = 1; p <= 4; ++p)
    for (int d = 1; d <= 3; ++d) {
      const GridSpec g(p, d);
      for (std::int64_t k = 0; k < g.N(); ++k) {
        const auto c = g.unflatten(k);
        for (int j = 0; j < d; ++j) EXPECT_EQ(c[j], (k >> (j * p)) & (g.P() - 1));
        EXPECT_EQ(g.flatten(c), k);
      }
    }
}

TEST(Linalg, BitOrderMatchesKronecker) {
  // X on wire w flips bit w of every basis index.
  for (int n = 1; n <= 4; ++n)
    for (int w = 0; w < n; ++w) {
      Circuit c(n);
      c.add(x_gate(w));
      const DenseOperator u = circuit_unitary(c);
      EXPECT_LT(max_abs(u - embed(pauli_x(), w, n)), 1e-15);
      for (std::int64_t k = 0; k < (1 << n); ++k) EXPECT_EQ(std::abs(u(k ^ (1 << w), k)), 1.0);
    }
}

TEST(Linalg, FoldFrequency) {
  EXPECT_EQ(fold_frequency(6, 8), -2);
  EXPECT_EQ(fold_frequency(4, 8), -4);
  EXPECT_EQ(fold_frequency(3, 8), 3);
}

TEST(Simulate, SingleHadamard) {
  Circuit c(1);
  c.add(h_gate(0));
  EXPECT_LT(max_abs(circuit_unitary(c) - hadamard()), 1e-15);
}

TEST(Simulate, EmptyCircuitIsIdentity) {
  EXPECT_LT(max_abs(circuit_unitary(Circuit(3)) - DenseOperator::Identity(8, 8)), 1e-15);
}

TEST(Simulate, RzThenInverseIsIdentity) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int k = 0; k < 50; ++k) {
    const double t = angle(rng);
    Circuit c(1);
    c.add(rz_gate(0, t));
    c.add(rz_gate(0, -t));
    EXPECT_LT(max_abs(circuit_unitary(c) - DenseOperator::Identity(2, 2)), 1e-12);
  }
}

TEST(Simulate, GateMatrices) {
  const double t = 0.7;
  Eigen::Matrix2cd ry, rz, ze;
  ry << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  rz << 1, 0, 0, std::polar(1.0, t);
  ze << std::polar(1.0, t), 0, 0, std::polar(1.0, -t);
  EXPECT_LT((ry_gate(0, t).matrix2() - ry).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((rz_gate(0, t).matrix2() - rz).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((zexp_gate(0, t).matrix2() - ze).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Simulate, HadamardOnZero) {
  Circuit c(1);
  c.add(h_gate(0));
  const StateVector v = apply_circuit(c, basis_state(1, 0));
  EXPECT_NEAR(v[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Simulate, CnotOnOneZero) {
  // |10>: wire 1 is set. CNOT with control 1, target 0 gives |11>.
  Circuit c(2);
  c.add(with_controls(x_gate(0), {{1, true}}));
  const StateVector v = apply_circuit(c, basis_state(2, 2));
  EXPECT_NEAR(std::abs(v[3]), 1.0, 1e-15);
}

TEST(Simulate, ControlledGateMatchesBlockOracle) {
  // Open control on wire 2 and closed control on wire 0 around Ry on wire 1.
  Circuit c(3);
  c.add(with_controls(ry_gate(1, 0.3), {{2, false}, {0, true}}));
  const DenseOperator u = circuit_unitary(c);
  DenseOperator ry(2, 2);
  ry << std::cos(0.15), -std::sin(0.15), std::sin(0.15), std::cos(0.15);
  for (std::int64_t k = 0; k < 8; ++k)
    for (std::int64_t l = 0; l < 8; ++l) {
      const bool fires = ((k >> 2) & 1) == 0 && (k & 1) == 1;
      const bool same_rest = (k & 5) == (l & 5);
      cplx expect = 0.0;
      if (same_rest) expect = fires ? ry((l >> 1) & 1, (k >> 1) & 1) : cplx(k == l ? 1.0 : 0.0);
      EXPECT_LT(std::abs(u(l, k) - expect), 1e-15);
    }
}

TEST(Simulate, RandomCircuitsAgreeWithDenseProduct) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const Circuit c = random_circuit(n, 40, rng);
    const DenseOperator u = circuit_unitary(c);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    StateVector s = StateVector::Random(1 << n);
    s.normalize();
    EXPECT_LT((apply_circuit(c, s) - u * s).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Simulate, GateByGateDenseProduct) {
  std::mt19937 rng(5);
  const int n = 3;
  Circuit c(n);
  c.add(h_gate(0));
  c.add(ry_gate(2, 0.4));
  c.add(sdg_gate(1));
  DenseOperator expect = embed(sdg_gate(0).matrix2(), 1, n) * embed(ry_gate(0, 0.4).matrix2(), 2, n) *
                         embed(hadamard(), 0, n);
  EXPECT_LT(max_abs(circuit_unitary(c) - expect), 1e-15);
}

TEST(Simulate, GlobalPhaseIsApplied) {
  Circuit c(1);
  c.set_global_phase(cplx(0, 1));
  EXPECT_LT(max_abs(circuit_unitary(c) - cplx(0, 1) * DenseOperator::Identity(2, 2)), 1e-15);
}

TEST(Simulate, DenseCapRefuses) {
  const int saved = simulation_caps().dense_wires;
  simulation_caps().dense_wires = 3;
  EXPECT_THROW(circuit_unitary(Circuit(4)), ResourceError);
  simulation_caps().dense_wires = saved;
}

TEST(Simulate, OracleXorTable) {
  // target (wire 2) ^= table[input (wires 0,1)].
  Circuit c(3);
  c.add(oracle_gate("f", {0, 1}, {2}, {0, 1, 1, 0}));
  const DenseOperator u = circuit_unitary(c);
  for (int k = 0; k < 8; ++k) {
    const int in = k & 3, out = ((k >> 2) ^ (in == 1 || in == 2 ? 1 : 0)) & 1;
    EXPECT_NEAR(std::abs(u(in | (out << 2), k)), 1.0, 1e-15);
  }
  EXPECT_EQ(c.oracle_call_count(), 1);
  EXPECT_EQ(c.elementary_gate_count(), 0);
}

TEST(Simulate, ElementaryCostRecursion) {
  Circuit c(5);
  c.add(x_gate(0));                                                 // 1
  c.add(with_controls(x_gate(0), {{1, true}}));                     // 1
  c.add(with_controls(x_gate(0), {{1, true}, {2, false}}));         // 3*1+2 = 5
  c.add(with_controls(x_gate(0), {{1, true}, {2, true}, {3, true}}));  // 3*5+2 = 17
  c.add(phase_gate(0.3));                                           // 0
  c.add(swap_gate(0, 1));                                           // 1
  EXPECT_EQ(c.elementary_gate_count(), 1 + 1 + 5 + 17 + 0 + 1);
}

TEST(Simulate, CircuitRejectsBadWires) {
  Circuit c(2);
  EXPECT_THROW(c.add(h_gate(2)), ContractViolation);
  EXPECT_THROW(c.add(with_controls(h_gate(0), {{0, true}})), ContractViolation);
}

TEST(Simulate, InverseUndoes) {
  std::mt19937 rng(21);
  const Circuit c = random_circuit(4, 30, rng);
  Circuit both = c;
  both.append(c.inverse());
  EXPECT_LT(max_abs(circuit_unitary(both) - DenseOperator::Identity(16, 16)), 1e-12);
}

TEST(BlockEncodingTest, IdentityWithAncilla) {
  BlockEncoding be = identity_encoding(2);
  be.circuit = be.circuit.widened(3);
  EXPECT_LT(max_abs(extract_block(be) - DenseOperator::Identity(4, 4)), 1e-15);
  StateVector s = StateVector::Random(4);
  s.normalize();
  EXPECT_NEAR(success_probability(be, s), 1.0, 1e-12);
}

TEST(BlockEncodingTest, LcuOfTwoIdentities) {
  const auto pair = prepare_pair({1.0, 1.0});
  const BlockEncoding be = lcu(pair, {identity_encoding(1), identity_encoding(1)});
  EXPECT_NEAR(be.gamma, 2.0, 1e-15);
  EXPECT_LT(max_abs(be.gamma * extract_block(be) - 2.0 * DenseOperator::Identity(2, 2)), 1e-12);
}

TEST(BlockEncodingTest, ExtractMatchesProjectedUnitary) {
  // Block of a random 3-wire unitary with wire 2 as ancilla, read off the
  // dense unitary directly.
  std::mt19937 rng(8);
  const Circuit c = random_circuit(3, 30, rng);
  BlockEncoding be;
  be.circuit = c;
  be.input_wires = {0, 1};
  be.output_wires = {0, 1};
  const DenseOperator u = circuit_unitary(c);
  EXPECT_LT(max_abs(extract_block(be) - u.topLeftCorner(4, 4)), 1e-13);
}

TEST(BlockEncodingTest, CanonicalizeMovesOutputRegister) {
  // Output on wire 1 carries the input of wire 0 after a swap.
  Circuit c(2);
  c.add(swap_gate(0, 1));
  c.add(h_gate(1));
  BlockEncoding be;
  be.circuit = c;
  be.input_wires = {0};
  be.output_wires = {1};
  const DenseOperator block = extract_block(be);
  EXPECT_LT(max_abs(block - hadamard()), 1e-15);
  const BlockEncoding canon = canonicalize(be);
  EXPECT_TRUE(canon.is_canonical());
  EXPECT_LT(max_abs(extract_block(canon) - hadamard()), 1e-15);
}

TEST(BlockEncodingTest, SuccessProbabilityNeedsNormalizedInput) {
  EXPECT_THROW(success_probability(identity_encoding(1), StateVector::Ones(2)), ContractViolation);
}
