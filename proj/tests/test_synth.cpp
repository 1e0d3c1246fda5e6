// Copyright 2026 The qcx Authors
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

#include "oracles.hpp"
#include "qcx/circuit.hpp"
#include "qcx/synth.hpp"

namespace qcx {
namespace {

using oracle::kPi;

Matrix rotation(char axis, double angle) {
  // exp(-i angle sigma / 2) written out
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  if (axis == 'x') m << c, -i * s, -i * s, c;
  if (axis == 'y') m << c, -s, s, c;
  if (axis == 'z') m << std::exp(-i * angle / 2.0), 0.0, 0.0, std::exp(i * angle / 2.0);
  return m;
}

// exp(-i (phi/4) (1 - Z) x (1 - Z)); the operator in the exponent is diag(0,0,0,4).
Matrix cphase(double phi) { return oracle::diag({1.0, 1.0, 1.0, std::polar(1.0, -phi)}); }

Eigen::VectorXcd simulate(const ContinuousCircuit& c) {
  Eigen::VectorXcd v = oracle::ket0(c.num_qubits());
  for (const auto& op : c.ops()) {
    Matrix m;
    switch (op.kind) {
      case ContinuousKind::Rx: m = rotation('x', op.angle); break;
      case ContinuousKind::Ry: m = rotation('y', op.angle); break;
      case ContinuousKind::Rz: m = rotation('z', op.angle); break;
      case ContinuousKind::H: m = oracle::hadamard(); break;
      case ContinuousKind::Cnot: m = oracle::cnot(); break;
      case ContinuousKind::CPhase: m = cphase(op.angle); break;
    }
    v = oracle::embed(m, op.targets, c.num_qubits()) * v;
  }
  return v;
}

SkParams fast() { return SkParams{}; }

TEST(Continuous, OpMatricesMatchDefinitions) {
  for (double a : {0.0, 0.3, -1.7, kPi}) {
    EXPECT_LT((op_matrix({ContinuousKind::Rx, a, {0}}).matrix() - rotation('x', a)).norm(), 1e-14);
    EXPECT_LT((op_matrix({ContinuousKind::Ry, a, {0}}).matrix() - rotation('y', a)).norm(), 1e-14);
    EXPECT_LT((op_matrix({ContinuousKind::Rz, a, {0}}).matrix() - rotation('z', a)).norm(), 1e-14);
    EXPECT_LT((op_matrix({ContinuousKind::CPhase, a, {0, 1}}).matrix() - cphase(a)).norm(), 1e-14);
  }
  EXPECT_LT((op_matrix({ContinuousKind::CPhase, kPi, {0, 1}}).matrix() -
             oracle::diag({1.0, 1.0, 1.0, -1.0})).norm(), 1e-14);
  EXPECT_THROW(op_matrix({ContinuousKind::Cnot, 0.0, {0}}), Error);
  EXPECT_THROW(op_matrix({ContinuousKind::Rz, std::nan(""), {0}}), Error);
}

TEST(Continuous, RunMatchesOracle) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 20; ++trial) {
    ContinuousCircuit c(3);
    for (int g = 0; g < 15; ++g) {
      const int q = static_cast<int>(rng() % 3);
      const int r = (q + 1 + static_cast<int>(rng() % 2)) % 3;
      switch (rng() % 6) {
        case 0: c.rx(angle(rng), q); break;
        case 1: c.ry(angle(rng), q); break;
        case 2: c.rz(angle(rng), q); break;
        case 3: c.h(q); break;
        case 4: c.cnot(q, r); break;
        default: c.cphase(angle(rng), q, r); break;
      }
    }
    EXPECT_LT((oracle::vec(run(c)) - simulate(c)).norm(), 1e-12);
  }
}

TEST(Continuous, TextRoundTripIsExact) {
  ContinuousCircuit c(2);
  c.ry(0.1234567890123456789, 0).rz(-2.5, 1).h(0).cnot(0, 1).cphase(kPi / 3, 0, 1).rx(1e-17, 1);
  const std::string text = to_text(c);
  EXPECT_NE(text.find("basis continuous"), std::string::npos);
  EXPECT_EQ(parse_continuous(text), c);
  EXPECT_THROW(parse_continuous("qubits 1\nbasis continuous\nry 0\n"), ParseError);
  EXPECT_THROW(parse_continuous("qubits 1\nbasis continuous\nfoo 1 0\n"), ParseError);
  EXPECT_EQ(c.continuous_count(), 4u);
}

TEST(PrepareStateExact, Examples) {
  EXPECT_TRUE(prepare_state_exact(zero_state(3)).empty());

  const ContinuousCircuit one = prepare_state_exact(basis_state(1, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.ops()[0].kind, ContinuousKind::Ry);
  EXPECT_NEAR(one.ops()[0].angle, kPi, 1e-12);

  const auto bell = StateVector::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  const ContinuousCircuit b = prepare_state_exact(bell);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.ops()[0].kind, ContinuousKind::Ry);
  EXPECT_NEAR(b.ops()[0].angle, kPi / 2, 1e-12);
  EXPECT_EQ(b.ops()[0].targets, std::vector<int>{0});
  EXPECT_EQ(b.ops()[1].kind, ContinuousKind::Cnot);
  EXPECT_EQ(b.ops()[1].targets, (std::vector<int>{0, 1}));
  EXPECT_NEAR(oracle::overlap2(bell, simulate(b)), 1.0, 1e-12);
}

TEST(PrepareStateExact, RandomStatesWithinLinearEnvelope) {
  std::mt19937_64 rng(7);
  constexpr double kCountConstant = 4.0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const StateVector phi = oracle::random_state(n, rng);
      const ContinuousCircuit c = prepare_state_exact(phi);
      EXPECT_GE(oracle::overlap2(phi, simulate(c)), 1.0 - 1e-9);
      EXPECT_LE(static_cast<double>(c.size()), kCountConstant * std::pow(2.0, n));
      EXPECT_LE(static_cast<double>(c.size()), n * n * std::pow(2.0, n));
    }
    // Product and sparse states too.
    const StateVector p = oracle::random_product(n, rng);
    EXPECT_GE(oracle::overlap2(p, simulate(prepare_state_exact(p))), 1.0 - 1e-9);
    const StateVector b = basis_state(n, rng() % (1u << n));
    EXPECT_GE(oracle::overlap2(b, simulate(prepare_state_exact(b))), 1.0 - 1e-9);
  }
}

TEST(CompileToBasis, NoContinuousGatesPassesThrough) {
  ContinuousCircuit cc(3);
  cc.cnot(0, 1).cnot(2, 0);
  const CompileResult r = compile_to_basis(cc, standard_basis(), 0.3, fast());
  Circuit expect(standard_basis(), 3);
  expect.append("CNOT", {0, 1}).append("CNOT", {2, 0});
  EXPECT_EQ(r.circuit, expect);
  EXPECT_EQ(r.continuous_gates, 0u);
}

TEST(CompileToBasis, BellAtTightPrecision) {
  const auto bell = StateVector::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  const CompileResult r = compile_to_basis(prepare_state_exact(bell), standard_basis(), 1e-3, fast());
  EXPECT_GE(fidelity(run(r.circuit), bell), 0.999);
  ASSERT_TRUE(r.fidelity.has_value());
  EXPECT_NEAR(*r.fidelity, fidelity(run(r.circuit), bell), 1e-12);
  EXPECT_EQ(r.circuit.basis()->id(), "standard");
}

TEST(CompileToBasis, EndToEndFidelityOnSmallRegisters) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const ContinuousCircuit cc = prepare_state_exact(oracle::random_state(n, rng));
      for (double eps : {0.1, 0.01}) {
        const CompileResult r = compile_to_basis(cc, standard_basis(), eps, fast());
        EXPECT_GE(fidelity(run(r.circuit), run(cc)), 1.0 - eps);
        EXPECT_NEAR(r.per_gate_budget, std::sqrt(eps) / (2.0 * static_cast<double>(cc.continuous_count())),
                    r.per_gate_budget);  // may be tightened, never loosened
        EXPECT_LE(r.per_gate_budget, std::sqrt(eps) / (2.0 * static_cast<double>(cc.continuous_count())));
      }
    }
  }
}

TEST(CompileToBasis, LengthGrowsPolylogInPrecision) {
  std::mt19937_64 rng(10);
  const ContinuousCircuit cc = prepare_state_exact(oracle::random_state(2, rng));
  std::vector<double> x, y;
  std::size_t previous = 0;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const CompileResult r = compile_to_basis(cc, standard_basis(), eps, fast());
    EXPECT_GT(r.circuit.size(), previous);
    previous = r.circuit.size();
    EXPECT_GE(fidelity(run(r.circuit), run(cc)), 1.0 - eps);
    x.push_back(std::log(std::log2(cc.continuous_count() / eps)));
    y.push_back(std::log(static_cast<double>(r.circuit.size())));
  }
  // Exponent of M ~ m log^c(m/eps): finite and far from exponential growth.
  const double c = (y.back() - y.front()) / (x.back() - x.front());
  EXPECT_GT(c, 0.0);
  EXPECT_LT(c, 8.0);
}

TEST(CompileToBasis, RejectsBadInput) {
  ContinuousCircuit cc(1);
  cc.ry(0.3, 0);
  EXPECT_THROW(compile_to_basis(cc, standard_basis(), 0.0, fast()), Error);
  EXPECT_THROW(compile_to_basis(cc, standard_basis(), 1.0, fast()), Error);
  EXPECT_THROW(compile_to_basis(cc, nullptr, 0.1, fast()), Error);
  EXPECT_THROW(compile_to_basis(cc, standard_basis(), 0.1, SkParams{0, 3}), Error);
  try {
    compile_to_basis(cc, standard_basis(), 1e-4, SkParams{3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
}

TEST(CompileState, SingleQubitUsesANetWord) {
  const auto plus = StateVector::from_amplitudes({std::sqrt(0.5), std::sqrt(0.5)});
  const CompileResult r = compile_state(plus, standard_basis(), 0.01, fast());
  EXPECT_EQ(r.circuit.size(), 1u);
  EXPECT_EQ(r.circuit.ops()[0].gate, "H");
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const StateVector phi = oracle::random_state(1, rng);
    EXPECT_GE(fidelity(run(compile_state(phi, standard_basis(), 0.01, fast()).circuit), phi), 0.99);
  }
}

TEST(Copies, CompositionAndFidelity) {
  const auto plus = StateVector::from_amplitudes({std::sqrt(0.5), std::sqrt(0.5)});
  const auto bell = StateVector::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  std::mt19937_64 rng(5);
  const StateVector phi = oracle::random_state(1, rng);

  const CompileResult one = copies_circuit(phi, 1, standard_basis(), 0.1, fast());
  EXPECT_EQ(one.circuit, compile_state(phi, standard_basis(), 0.1 / 4, fast()).circuit);
  EXPECT_GE(fidelity(run(one.circuit), phi), 0.9);

  const CompileResult three = copies_circuit(plus, 3, standard_basis(), 0.06, fast());
  EXPECT_EQ(three.circuit, replicate(compile_state(plus, standard_basis(), 0.005, fast()).circuit, 3));
  EXPECT_GE(fidelity(run(three.circuit), tensor(tensor(plus, plus), plus)), 0.94);

  const CompileResult two = copies_circuit(bell, 2, standard_basis(), 0.05, fast());
  EXPECT_GE(fidelity(run(two.circuit), tensor(bell, bell)), 0.95);

  EXPECT_THROW(copies_circuit(phi, 0, standard_basis(), 0.1, fast()), Error);
  EXPECT_THROW(copies_circuit(zero_state(7), 3, standard_basis(), 0.1, fast()), Error);
}

TEST(Separable, CompositionAndFidelity) {
  std::mt19937_64 rng(6);
  std::vector<StateVector> parts;
  for (int i = 0; i < 4; ++i) parts.push_back(oracle::random_state(1, rng));
  const CompileResult r = separable_circuit(parts, standard_basis(), 0.04, fast());
  std::vector<Circuit> each;
  for (const auto& p : parts) each.push_back(compile_state(p, standard_basis(), 0.01, fast()).circuit);
  EXPECT_EQ(r.circuit, juxtapose(each));
  const StateVector whole = tensor(tensor(parts[0], parts[1]), tensor(parts[2], parts[3]));
  EXPECT_GE(fidelity(run(r.circuit), whole), 0.96);

  const CompileResult generic = compile_state(whole, standard_basis(), 0.04, fast());
  EXPECT_LT(r.circuit.size(), generic.circuit.size());

  const CompileResult single = separable_circuit({whole}, standard_basis(), 0.04, fast());
  EXPECT_EQ(single.circuit, generic.circuit);
  EXPECT_THROW(separable_circuit({}, standard_basis(), 0.1, fast()), Error);
}

TEST(Juxtapose, OffsetsTargets) {
  Circuit a(standard_basis(), 1), b(standard_basis(), 2);
  a.append("H", {0});
  b.append("CNOT", {1, 0});
  Circuit expect(standard_basis(), 3);
  expect.append("H", {0}).append("CNOT", {2, 1});
  EXPECT_EQ(juxtapose({a, b}), expect);
  EXPECT_EQ(replicate(a, 2).size(), 2u);
  EXPECT_THROW(juxtapose({Circuit(standard_basis(), 15), Circuit(standard_basis(), 6)}), Error);
  EXPECT_THROW(juxtapose({a, Circuit(graph_coarsening().basis, 1)}), Error);
}

}  // namespace
}  // namespace qcx
