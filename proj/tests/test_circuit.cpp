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

#include <sstream>

#include "oracles.hpp"
#include "qcx/circuit.hpp"

namespace qcx {
namespace {

using oracle::kPi;

const Matrix& gate(std::string_view name) { return standard_basis()->at(name).matrix.matrix(); }

TEST(StandardBasis, MatricesFollowTheReferenceTable) {
  const BasisPtr b = standard_basis();
  ASSERT_EQ(b->gates().size(), 4u);
  EXPECT_LT((gate("H") - oracle::hadamard()).norm(), 1e-15);
  EXPECT_LT((gate("S") - oracle::diag({1.0, Complex(0.0, 1.0)})).norm(), 1e-15);
  EXPECT_LT((gate("T") - oracle::diag({std::polar(1.0, -kPi / 8), std::polar(1.0, kPi / 8)})).norm(),
            1e-15);
  EXPECT_LT((gate("CNOT") - oracle::cnot()).norm(), 1e-15);
  EXPECT_EQ(b->at("CNOT").arity, 2);
  EXPECT_EQ(b->find("X"), nullptr);
  EXPECT_THROW(b->at("X"), Error);
}

TEST(StandardBasis, HthIsQuarterTurnAboutX) {
  const Matrix hth = gate("H") * gate("T") * gate("H");
  Matrix rx(2, 2);  // exp(-i pi/8 X)
  rx << std::cos(kPi / 8), Complex(0, -std::sin(kPi / 8)), Complex(0, -std::sin(kPi / 8)),
      std::cos(kPi / 8);
  EXPECT_LT(phase_insensitive_distance(UnitaryMatrix(hth), UnitaryMatrix(rx)), 1e-10);
}

TEST(GateBasis, RejectsMalformedBases) {
  EXPECT_THROW(GateBasis("x", {}), Error);
  const Gate h{"H", 1, UnitaryMatrix(oracle::hadamard())};
  EXPECT_THROW(GateBasis("x", {h, h}), Error);
  EXPECT_THROW(GateBasis("x", {Gate{"H", 2, UnitaryMatrix(oracle::hadamard())}}), Error);
}

TEST(Circuit, ValidatesAtConstruction) {
  Circuit c(standard_basis(), 2);
  EXPECT_THROW(c.append("X", {0}), Error);
  EXPECT_THROW(c.append("H", {2}), Error);
  EXPECT_THROW(c.append("CNOT", {1, 1}), Error);
  EXPECT_THROW(c.append("CNOT", {1}), Error);
  EXPECT_THROW(Circuit(standard_basis(), 0), Error);
  EXPECT_TRUE(c.empty());
}

TEST(Run, Examples) {
  const Circuit empty(standard_basis(), 2);
  EXPECT_EQ(run(empty)[0], Complex(1.0, 0.0));

  Circuit bell(standard_basis(), 2);
  bell.append("H", {0}).append("CNOT", {0, 1});
  Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(4);
  expect(0) = expect(3) = std::sqrt(0.5);
  EXPECT_NEAR(oracle::overlap2(run(bell), expect), 1.0, 1e-12);

  Circuit t(standard_basis(), 1);
  t.append("T", {0});
  EXPECT_NEAR(fidelity(run(t), zero_state(1)), 1.0, 1e-15);
  EXPECT_THROW(run(t, *graph_coarsening().basis), Error);
}

TEST(Run, AgreesWithFullMatrixProduct) {
  std::mt19937_64 rng(21);
  const char* names[] = {"H", "S", "T", "CNOT"};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    Circuit c(standard_basis(), n);
    Eigen::VectorXcd v = oracle::ket0(n);
    for (int g = 0; g < 25; ++g) {
      const char* name = names[rng() % (n > 1 ? 4 : 3)];
      std::vector<int> t{static_cast<int>(rng() % n)};
      if (std::string_view(name) == "CNOT") t.push_back((t[0] + 1 + static_cast<int>(rng() % (n - 1))) % n);
      c.append(name, t);
      v = oracle::embed(gate(name), t, n) * v;
    }
    EXPECT_LT((oracle::vec(run(c)) - v).norm(), 1e-12);
  }
}

TEST(PreparesWithPrecision, Examples) {
  Circuit bell(standard_basis(), 2);
  bell.append("H", {0}).append("CNOT", {0, 1});
  const auto bell_state = StateVector::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  EXPECT_TRUE(prepares_with_precision(bell, bell_state, 0.0));

  Circuit h(standard_basis(), 1);
  h.append("H", {0});
  EXPECT_FALSE(prepares_with_precision(h, zero_state(1), 0.4));
  EXPECT_TRUE(prepares_with_precision(h, zero_state(1), 0.6));
  EXPECT_THROW(prepares_with_precision(h, zero_state(1), 1.5), Error);
  EXPECT_THROW(prepares_with_precision(h, zero_state(2), 0.5), Error);
}

TEST(PreparesWithPrecision, MonotoneInEpsilon) {
  std::mt19937_64 rng(6);
  Circuit c(standard_basis(), 2);
  c.append("H", {0}).append("T", {0}).append("CNOT", {0, 1}).append("H", {1});
  for (int i = 0; i < 30; ++i) {
    const StateVector target = oracle::random_state(2, rng);
    bool seen = false;
    for (double eps = 0.0; eps <= 1.0; eps += 0.05) {
      const bool ok = prepares_with_precision(c, target, eps);
      EXPECT_TRUE(!seen || ok);
      seen = seen || ok;
    }
  }
}

TEST(Coarsen, CzFromHadamardConjugatedCnot) {
  const Coarsening& g = graph_coarsening();
  const Circuit* cz = g.dictionary.find("CZ");
  ASSERT_NE(cz, nullptr);
  EXPECT_EQ(cz->size(), 3u);
  EXPECT_LT((g.basis->at("CZ").matrix.matrix() - oracle::diag({1.0, 1.0, 1.0, -1.0})).norm(), 1e-12);
  EXPECT_GT(g.dictionary.encoded_size_bits(), 0u);
  EXPECT_EQ(g.dictionary.encoded_size_bits(), 8 * g.dictionary.to_text().size());
}

TEST(Coarsen, ToffoliFromFifteenGateFragment) {
  // T-dagger spelled as seven T gates; T^8 = -I so T^7 is T-dagger up to phase.
  const BasisPtr fine = standard_basis();
  Circuit frag(fine, 3);
  auto tdg = [&](int q) {
    for (int i = 0; i < 7; ++i) frag.append("T", {q});
  };
  int logical = 0;
  auto op = [&](const char* name, std::vector<int> t) {
    ++logical;
    if (std::string_view(name) == "Tdg") {
      tdg(t[0]);
    } else {
      frag.append(name, std::move(t));
    }
  };
  op("H", {2});
  op("CNOT", {1, 2});
  op("Tdg", {2});
  op("CNOT", {0, 2});
  op("T", {2});
  op("CNOT", {1, 2});
  op("Tdg", {2});
  op("CNOT", {0, 2});
  op("T", {1});
  op("T", {2});
  op("H", {2});
  op("CNOT", {0, 1});
  op("T", {0});
  op("Tdg", {1});
  op("CNOT", {0, 1});
  EXPECT_EQ(logical, 15);

  Matrix toffoli = Matrix::Identity(8, 8);
  toffoli(6, 6) = toffoli(7, 7) = 0.0;
  toffoli(6, 7) = toffoli(7, 6) = 1.0;
  const Coarsening c = coarsen(fine, "toffoli", {{"CCX", frag, toffoli}});
  EXPECT_EQ(c.basis->at("CCX").arity, 3);
  EXPECT_LT(phase_insensitive_distance(c.basis->at("CCX").matrix, UnitaryMatrix(toffoli)), 1e-8);

  Circuit wrong(fine, 3);
  wrong.append("H", {0});
  EXPECT_THROW(coarsen(fine, "bad", {{"CCX", wrong, toffoli}}), Error);
}

TEST(Coarsen, EmptyDefinitionsKeepTheBasis) {
  const Coarsening c = coarsen(standard_basis(), "same", {});
  EXPECT_EQ(c.basis->id(), standard_basis()->id());
  EXPECT_TRUE(c.dictionary.entries().empty());
  EXPECT_EQ(c.dictionary.encoded_size_bits(), 0u);
}

TEST(Expand, Examples) {
  const Coarsening& g = graph_coarsening();
  Circuit cz(g.basis, 2);
  cz.append("CZ", {0, 1});
  Circuit expect(standard_basis(), 2);
  expect.append("H", {1}).append("CNOT", {0, 1}).append("H", {1});
  EXPECT_EQ(expand(cz, g.dictionary), expect);

  EXPECT_TRUE(expand(Circuit(g.basis, 3), g.dictionary).empty());

  Circuit triangle(g.basis, 3);
  triangle.append("H", {0}).append("H", {1}).append("H", {2});
  triangle.append("CZ", {0, 1}).append("CZ", {1, 2}).append("CZ", {0, 2});
  EXPECT_EQ(expand(triangle, g.dictionary).size(), 3u + 3u * 3u);

  Circuit foreign(standard_basis(), 1);
  foreign.append("T", {0});
  EXPECT_THROW(expand(foreign, g.dictionary), Error);
}

TEST(Expand, CommutesWithRun) {
  std::mt19937_64 rng(13);
  const Coarsening& g = graph_coarsening();
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    Circuit c(g.basis, n);
    const int len = static_cast<int>(rng() % 51);
    for (int i = 0; i < len; ++i) {
      const int a = static_cast<int>(rng() % n);
      if (rng() % 2) {
        c.append("H", {a});
      } else {
        c.append("CZ", {a, (a + 1 + static_cast<int>(rng() % (n - 1))) % n});
      }
    }
    const Circuit e = expand(c, g.dictionary);
    EXPECT_GE(fidelity(run(e), run(c)), 1.0 - 1e-8);
    EXPECT_LE(e.size(), 3 * c.size());
  }
}

TEST(CircuitText, RoundTripsAndReportsLines) {
  Circuit c(standard_basis(), 3);
  c.append("H", {0}).append("CNOT", {0, 2}).append("T", {1});
  const std::string text = to_text(c);
  EXPECT_EQ(text, "qubits 3\nbasis standard\nH 0\nCNOT 0 2\nT 1\n");
  EXPECT_EQ(parse_circuit("# comment\n" + text + "\n"), c);
  EXPECT_EQ(parse_circuit(to_text(Circuit(graph_coarsening().basis, 2))).basis()->id(), "graph");
  try {
    parse_circuit("qubits 2\nbasis standard\nH 0\nH x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_circuit("qubits 2\nbasis nope\n"), Error);
  EXPECT_THROW(parse_circuit("basis standard\n"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 1\nbasis standard\nCNOT 0 1\n"), ParseError);
}

}  // namespace
}  // namespace qcx
