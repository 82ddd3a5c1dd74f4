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

#include "pdoenc/errors.hpp"
#include "pdoenc/gates.hpp"
#include "pdoenc/listing.hpp"
#include "pdoenc/pipelines.hpp"
#include "pdoenc/qsp.hpp"

using namespace pdoenc;

namespace {

void expect_same_unitary(const Circuit& a, const Circuit& b) {
  ASSERT_EQ(a.wire_count(), b.wire_count());
  EXPECT_LT(max_abs(circuit_unitary(a) - circuit_unitary(b)), 1e-12);
}

}  // namespace

TEST(Listing, HeaderAndShape) {
  const std::string text = write_circuit(qft_circuit(2));
  EXPECT_NE(text.find("bit"), std::string::npos);
  EXPECT_NE(text.find("wires 2"), std::string::npos);
  EXPECT_NE(text.find("H targets=1 controls=-"), std::string::npos);
}

TEST(Listing, CircuitRoundTrip) {
  Circuit c(4);
  c.add(h_gate(0));
  c.add(with_controls(rz_gate(1, 0.123456789012345), {{0, true}, {2, false}}));
  c.add(ry_gate(2, -1.1));
  c.add(zexp_gate(3, 0.7));
  c.add(with_controls(phase_gate(0.3), {{3, false}}));
  c.add(swap_gate(0, 3));
  c.add(oracle_gate("f", {0, 1}, {2, 3}, {0, 3, 1, 2}));
  DenseOperator m(2, 2);
  m << cplx(0, 1), 0, 0, cplx(0.6, 0.8);
  c.add(unitary_gate("u", {1}, m));
  c.set_global_phase(cplx(0, -1));
  const Circuit back = parse_circuit(write_circuit(c));
  EXPECT_EQ(back.gates().size(), c.gates().size());
  EXPECT_EQ(back.elementary_gate_count(), c.elementary_gate_count());
  EXPECT_EQ(back.oracle_call_count(), c.oracle_call_count());
  expect_same_unitary(c, back);
  EXPECT_EQ(write_circuit(back), write_circuit(c));
}

TEST(Listing, EncodingRoundTrip) {
  const BlockEncoding be = diag_function_encoding([](double x) { return 0.25 * x; },
                                                  DiagonalSpec::with_default_theta(Branch::Minus, 2), 1.5, 1e-4);
  const BlockEncoding back = parse_encoding(write_encoding(be));
  EXPECT_DOUBLE_EQ(back.gamma, be.gamma);
  EXPECT_DOUBLE_EQ(back.epsilon, be.epsilon);
  EXPECT_EQ(back.hermitian, be.hermitian);
  EXPECT_EQ(back.input_wires, be.input_wires);
  EXPECT_EQ(back.output_wires, be.output_wires);
  EXPECT_EQ(back.workspace, be.workspace);
  expect_same_unitary(be.circuit, back.circuit);
}

TEST(Listing, PipelineRoundTrip) {
  const GridSpec g(2, 1);
  const SeparableSymbol s{[](auto& x) { return cplx(x[0]); }, [](auto& xi) { return cplx(double(xi[0]) / 2.0); },
                          1.0, 1.0};
  const BlockEncoding be = separable_pdo_encoding(s, g, 1e-2);
  const BlockEncoding back = parse_encoding(write_encoding(be));
  EXPECT_LT(max_abs(extract_block(back) - extract_block(be)), 1e-12);
}

TEST(Listing, Malformed) {
  EXPECT_THROW(parse_circuit("wires 1\nglobal_phase 1 0\ngates 1\nH targets=5 controls=-\n"), std::exception);
  EXPECT_THROW(parse_circuit("wires 1\nglobal_phase 1 0\ngates 1\nFOO targets=0 controls=-\n"), std::exception);
  EXPECT_THROW(parse_circuit("wires 1\nglobal_phase 1 0\ngates 1\nRz targets=0 controls=- angle=1x\n"),
               ContractViolation);
  EXPECT_THROW(parse_circuit("wires 1\nglobal_phase 1 0\ngates 2\nH targets=0 controls=-\n"), ContractViolation);
}
