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


/**
 * @file
 * Continuous-gate circuits, exact state preparation, and compilation of
 * continuous circuits and states into finite-basis circuits.
 */
#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcx/circuit.hpp"
#include "qcx/sk.hpp"
#include "qcx/statevec.hpp"

namespace qcx {

enum class ContinuousKind { Rx, Ry, Rz, H, Cnot, CPhase };

struct ContinuousOp {
  ContinuousKind kind;
  double angle;  // radians; 0 for H and CNOT
  std::vector<int> targets;

  friend bool operator==(const ContinuousOp&, const ContinuousOp&) = default;
};

/// Circuit over the continuous set of one-qubit rotations plus CNOT and the
/// controlled phase diag(1, 1, 1, e^{-i phi}).
///
/// Rotations follow R_a(t) = exp(-i t/2 sigma_a), so Ry(t) = [[c, -s], [s, c]]
/// and Rz(t) = diag(e^{-it/2}, e^{it/2}).
class ContinuousCircuit {
 public:
  explicit ContinuousCircuit(int num_qubits);

  ContinuousCircuit& rx(double angle, int target);
  ContinuousCircuit& ry(double angle, int target);
  ContinuousCircuit& rz(double angle, int target);
  ContinuousCircuit& h(int target);
  ContinuousCircuit& cnot(int control, int target);
  ContinuousCircuit& cphase(double angle, int a, int b);
  ContinuousCircuit& append(const ContinuousOp& op);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<ContinuousOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  /// Rotations and controlled phases; H and CNOT are not counted.
  std::size_t continuous_count() const;

  friend bool operator==(const ContinuousCircuit&, const ContinuousCircuit&) = default;

 private:
  int num_qubits_;
  std::vector<ContinuousOp> ops_;
};

UnitaryMatrix op_matrix(const ContinuousOp& op);
StateVector run(const ContinuousCircuit& c, int max_qubits = kDefaultMaxQubits);

/// Same line format as finite circuits with "basis continuous" and lines
/// "rx|ry|rz <angle> <t>", "H <t>", "CNOT <c> <t>", "cphase <angle> <a> <b>".
/// Angles are written with 17 significant digits.
void write_continuous(std::ostream& out, const ContinuousCircuit& c);
std::string to_text(const ContinuousCircuit& c);
ContinuousCircuit read_continuous(std::istream& in);
ContinuousCircuit parse_continuous(const std::string& text);

/// Recursive disentangling: y and z multiplexed rotations per qubit, lowered
/// through Gray-code CNOT ladders. Uses fewer than 4 * 2^N gates.
ContinuousCircuit prepare_state_exact(const StateVector& phi);

struct CompileResult {
  Circuit circuit;
  /// Operator-norm budget each continuous gate was held to (0 if none).
  double per_gate_budget = 0.0;
  std::size_t continuous_gates = 0;
  /// Deepest SK level any gate needed.
  int max_depth_used = 0;
  /// Simulated fidelity against the continuous circuit (or target state),
  /// when the register was small enough to simulate.
  std::optional<double> fidelity;
};

/// Largest register compile_* verify by simulation.
inline constexpr int kCompileSimulationLimit = 14;

/// Replaces every rotation by an SK word within sqrt(epsilon) / (2m) of it
/// (m = number of one-qubit continuous gates after lowering controlled
/// phases), raising the SK depth per gate only as far as needed. Registers of
/// up to kCompileSimulationLimit qubits are simulated and the budget halved
/// until fidelity >= 1 - epsilon. The basis must provide CNOT, or CZ and H.
/// Throws Infeasible when the budget cannot be met at params.depth.
CompileResult compile_to_basis(const ContinuousCircuit& cc, const BasisPtr& basis,
                               double epsilon, const SkParams& params = {});

/// Circuit over `basis` preparing `phi` with precision epsilon. One-qubit
/// states take the shortest qualifying net word; larger ones go through
/// prepare_state_exact and compile_to_basis.
CompileResult compile_state(const StateVector& phi, const BasisPtr& basis, double epsilon,
                            const SkParams& params = {});

/// Places `c` on `copies` consecutive registers.
Circuit replicate(const Circuit& c, int copies);
/// Places circuits side by side, first circuit on the lowest qubits.
Circuit juxtapose(const std::vector<Circuit>& parts);

/// m copies of phi, each compiled at epsilon / (4m).
CompileResult copies_circuit(const StateVector& phi, int copies, const BasisPtr& basis,
                             double epsilon, const SkParams& params = {});

/// Each factor compiled at epsilon / J on its own register.
CompileResult separable_circuit(const std::vector<StateVector>& parts, const BasisPtr& basis,
                                double epsilon, const SkParams& params = {});

}  // namespace qcx
