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
 * Circuit IR over named finite gate bases, execution against |0...0>, and
 * basis coarsening through composite-gate dictionaries.
 */
#pragma once

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcx/statevec.hpp"

namespace qcx {

struct Gate {
  std::string name;
  int arity;
  UnitaryMatrix matrix;
};

class GateBasis {
 public:
  /// Throws Domain on an empty gate list, duplicate names, or a matrix whose
  /// size disagrees with the declared arity.
  GateBasis(std::string id, std::vector<Gate> gates);

  const std::string& id() const noexcept { return id_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const Gate* find(std::string_view name) const;
  const Gate& at(std::string_view name) const;

 private:
  std::string id_;
  std::vector<Gate> gates_;
};

using BasisPtr = std::shared_ptr<const GateBasis>;

struct Operation {
  std::string gate;
  std::vector<int> targets;

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// Ordered gate applications; ops run left to right. Every append is
/// validated, so a constructed circuit can always be run.
class Circuit {
 public:
  Circuit(BasisPtr basis, int num_qubits);

  Circuit& append(std::string_view gate, std::vector<int> targets);

  const BasisPtr& basis() const noexcept { return basis_; }
  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Operation>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.basis_->id() == b.basis_->id() && a.num_qubits_ == b.num_qubits_ &&
           a.ops_ == b.ops_;
  }

 private:
  BasisPtr basis_;
  int num_qubits_;
  std::vector<Operation> ops_;
};

/// {H, S, T, CNOT}; T = diag(e^{-i pi/8}, e^{i pi/8}), CNOT targets are
/// (control, target).
BasisPtr standard_basis();

/// Runs `c` on |0...0>.
StateVector run(const Circuit& c, int max_qubits = kDefaultMaxQubits);

/// Same, insisting `c` was built over `basis`.
StateVector run(const Circuit& c, const GateBasis& basis,
                int max_qubits = kDefaultMaxQubits);

/// fidelity(run(c), target) >= 1 - epsilon. Throws Domain for epsilon
/// outside [0, 1].
bool prepares_with_precision(const Circuit& c, const StateVector& target,
                             double epsilon);

/// Composed unitary of a circuit on its own register (register <= 10 qubits).
UnitaryMatrix circuit_unitary(const Circuit& c);

// ---------------------------------------------------------------------------
// Coarsening

/// Tolerance for composite gates against their declared matrices.
inline constexpr double kCompositeTolerance = 1e-8;

struct CompositeDefinition {
  std::string name;
  /// Fragment over the fine basis; its qubit count is the composite's arity.
  Circuit fragment;
  /// When present the fragment must reproduce it (phase-insensitively).
  std::optional<Matrix> expected;
};

class CoarseningDictionary {
 public:
  CoarseningDictionary(BasisPtr fine, std::map<std::string, Circuit> entries);

  const BasisPtr& fine_basis() const noexcept { return fine_; }
  const std::map<std::string, Circuit>& entries() const noexcept { return entries_; }
  const Circuit* find(std::string_view name) const;
  /// Byte size of the dictionary text times 8: the basis-change constant.
  std::size_t encoded_size_bits() const noexcept { return encoded_size_bits_; }
  std::string to_text() const;

 private:
  BasisPtr fine_;
  std::map<std::string, Circuit> entries_;
  std::size_t encoded_size_bits_;
};

struct Coarsening {
  BasisPtr basis;
  CoarseningDictionary dictionary;
};

/// Builds the composite basis `coarse_id` from fragments over `fine`.
/// Throws NotUnitary when a declared matrix is not unitary or the fragment
/// does not reproduce it within kCompositeTolerance. With no definitions the
/// fine basis itself comes back with an empty dictionary.
Coarsening coarsen(const BasisPtr& fine, std::string coarse_id,
                   const std::vector<CompositeDefinition>& defs);

/// Replaces every composite gate by its fragment. Throws Lookup when a gate
/// has no dictionary entry.
Circuit expand(const Circuit& c, const CoarseningDictionary& dict);

/// {H, CZ} with CZ := H@1 CNOT@(0,1) H@1 over the standard basis.
const Coarsening& graph_coarsening();
/// {I, N}: identity marker and NOT (N := H S S H) over the standard basis.
const Coarsening& classical_coarsening();

/// Resolves "standard", "graph", "classical". Throws Lookup otherwise.
BasisPtr basis_by_id(std::string_view id);

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   qubits N
//   basis <id>
//   <gate> <t1> [t2]

void write_circuit(std::ostream& out, const Circuit& c);
std::string to_text(const Circuit& c);
/// Throws ParseError carrying the 1-based line number.
Circuit read_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);

}  // namespace qcx
