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

#include "qcx/circuit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qcx {

GateBasis::GateBasis(std::string id, std::vector<Gate> gates)
    : id_(std::move(id)), gates_(std::move(gates)) {
  if (gates_.empty()) throw Error(ErrorKind::Domain, "gate basis '" + id_ + "' is empty");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.arity < 1 || g.matrix.dim() != (1 << g.arity)) {
      throw Error(ErrorKind::Dimension, "gate '" + g.name + "' matrix does not match arity");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gates_[j].name == g.name) {
        throw Error(ErrorKind::Domain, "duplicate gate name '" + g.name + "'");
      }
    }
  }
}

const Gate* GateBasis::find(std::string_view name) const {
  for (const auto& g : gates_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const Gate& GateBasis::at(std::string_view name) const {
  if (const Gate* g = find(name)) return *g;
  throw Error(ErrorKind::Lookup,
              "gate '" + std::string(name) + "' not in basis '" + id_ + "'");
}

Circuit::Circuit(BasisPtr basis, int num_qubits)
    : basis_(std::move(basis)), num_qubits_(num_qubits) {
  if (!basis_) throw Error(ErrorKind::Domain, "circuit needs a gate basis");
  if (num_qubits_ < 1) throw Error(ErrorKind::Size, "circuit needs at least one qubit");
}

Circuit& Circuit::append(std::string_view gate, std::vector<int> targets) {
  const Gate& g = basis_->at(gate);
  if (static_cast<int>(targets.size()) != g.arity) {
    throw Error(ErrorKind::Target, "gate '" + g.name + "' takes " +
                                       std::to_string(g.arity) + " targets");
  }
  detail::validate_targets(num_qubits_, targets);
  ops_.push_back(Operation{g.name, std::move(targets)});
  return *this;
}

BasisPtr standard_basis() {
  static const BasisPtr basis = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    Matrix h(2, 2);
    h << r, r, r, -r;
    Matrix s(2, 2);
    s << 1.0, 0.0, 0.0, i;
    Matrix t(2, 2);
    t << std::exp(-i * std::numbers::pi / 8.0), 0.0, 0.0, std::exp(i * std::numbers::pi / 8.0);
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    return std::make_shared<const GateBasis>(
        "standard", std::vector<Gate>{{"H", 1, UnitaryMatrix(h)},
                                      {"S", 1, UnitaryMatrix(s)},
                                      {"T", 1, UnitaryMatrix(t)},
                                      {"CNOT", 2, UnitaryMatrix(cnot)}});
  }();
  return basis;
}

StateVector run(const Circuit& c, int max_qubits) {
  if (c.num_qubits() > max_qubits) {
    throw Error(ErrorKind::Size, "circuit register exceeds the simulator limit");
  }
  std::vector<Complex> amps(std::size_t{1} << c.num_qubits(), Complex{0.0, 0.0});
  amps[0] = 1.0;
  const GateBasis& basis = *c.basis();
  for (const auto& op : c.ops()) {
    detail::apply_matrix(amps, c.num_qubits(), basis.at(op.gate).matrix.matrix(), op.targets);
  }
  return StateVector::from_amplitudes(std::move(amps), max_qubits);
}

StateVector run(const Circuit& c, const GateBasis& basis, int max_qubits) {
  if (c.basis()->id() != basis.id()) {
    throw Error(ErrorKind::Lookup, "circuit is over basis '" + c.basis()->id() +
                                       "', not '" + basis.id() + "'");
  }
  return run(c, max_qubits);
}

bool prepares_with_precision(const Circuit& c, const StateVector& target, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorKind::Domain, "precision must lie in [0, 1]");
  }
  if (c.num_qubits() != target.num_qubits()) {
    throw Error(ErrorKind::Dimension, "circuit and target differ in qubit count");
  }
  // Exact preparations come out at 1 - O(1e-16); do not let rounding reject them.
  return fidelity(run(c), target) >= 1.0 - epsilon - 1e-12;
}

UnitaryMatrix circuit_unitary(const Circuit& c) {
  if (c.num_qubits() > 10) {
    throw Error(ErrorKind::Size, "circuit_unitary is limited to 10 qubits");
  }
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Matrix u(dim, dim);
  const GateBasis& basis = *c.basis();
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[col] = 1.0;
    for (const auto& op : c.ops()) {
      detail::apply_matrix(amps, c.num_qubits(), basis.at(op.gate).matrix.matrix(), op.targets);
    }
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = amps[row];
  }
  return UnitaryMatrix(std::move(u), 1e-8);
}

// ---------------------------------------------------------------------------

CoarseningDictionary::CoarseningDictionary(BasisPtr fine, std::map<std::string, Circuit> entries)
    : fine_(std::move(fine)), entries_(std::move(entries)) {
  encoded_size_bits_ = entries_.empty() ? 0 : 8 * to_text().size();
}

const Circuit* CoarseningDictionary::find(std::string_view name) const {
  const auto it = entries_.find(std::string(name));
  return it == entries_.end() ? nullptr : &it->second;
}

std::string CoarseningDictionary::to_text() const {
  std::ostringstream out;
  for (const auto& [name, fragment] : entries_) {
    out << "gate " << name << ' ' << fragment.num_qubits() << '\n';
    for (const auto& op : fragment.ops()) {
      out << op.gate;
      for (int t : op.targets) out << ' ' << t;
      out << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

Coarsening coarsen(const BasisPtr& fine, std::string coarse_id,
                   const std::vector<CompositeDefinition>& defs) {
  if (defs.empty()) return Coarsening{fine, CoarseningDictionary(fine, {})};

  std::vector<Gate> gates;
  std::map<std::string, Circuit> entries;
  for (const auto& def : defs) {
    if (def.fragment.basis()->id() != fine->id()) {
      throw Error(ErrorKind::Lookup, "fragment for '" + def.name + "' is not over basis '" +
                                         fine->id() + "'");
    }
    UnitaryMatrix composed = circuit_unitary(def.fragment);
    if (def.expected) {
      const UnitaryMatrix expected(*def.expected, kCompositeTolerance);
      if (expected.dim() != composed.dim() ||
          phase_insensitive_distance(expected, composed) > kCompositeTolerance) {
        throw Error(ErrorKind::NotUnitary,
                    "fragment for '" + def.name + "' does not reproduce its declared matrix");
      }
      // Same phase too: keep the declared entries so that, e.g., NOT stays exact.
      if ((expected.matrix() - composed.matrix()).cwiseAbs().maxCoeff() <= kCompositeTolerance) {
        composed = expected;
      }
    }
    gates.push_back(Gate{def.name, def.fragment.num_qubits(), std::move(composed)});
    entries.emplace(def.name, def.fragment);
  }
  auto basis = std::make_shared<const GateBasis>(std::move(coarse_id), std::move(gates));
  return Coarsening{std::move(basis), CoarseningDictionary(fine, std::move(entries))};
}

Circuit expand(const Circuit& c, const CoarseningDictionary& dict) {
  Circuit out(dict.fine_basis(), c.num_qubits());
  for (const auto& op : c.ops()) {
    const Circuit* fragment = dict.find(op.gate);
    if (!fragment) {
      throw Error(ErrorKind::Lookup, "no dictionary entry for gate '" + op.gate + "'");
    }
    for (const auto& inner : fragment->ops()) {
      std::vector<int> targets;
      targets.reserve(inner.targets.size());
      for (int t : inner.targets) targets.push_back(op.targets.at(static_cast<std::size_t>(t)));
      out.append(inner.gate, std::move(targets));
    }
  }
  return out;
}

const Coarsening& graph_coarsening() {
  static const Coarsening coarsening = [] {
    const BasisPtr fine = standard_basis();
    Circuit h(fine, 1);
    h.append("H", {0});
    Circuit cz(fine, 2);
    cz.append("H", {1}).append("CNOT", {0, 1}).append("H", {1});
    Matrix cz_matrix = Matrix::Identity(4, 4);
    cz_matrix(3, 3) = -1.0;
    return coarsen(fine, "graph",
                   {{"H", std::move(h), std::nullopt}, {"CZ", std::move(cz), cz_matrix}});
  }();
  return coarsening;
}

const Coarsening& classical_coarsening() {
  static const Coarsening coarsening = [] {
    const BasisPtr fine = standard_basis();
    Circuit identity(fine, 1);
    Circuit x(fine, 1);
    x.append("H", {0}).append("S", {0}).append("S", {0}).append("H", {0});
    Matrix x_matrix(2, 2);
    x_matrix << 0.0, 1.0, 1.0, 0.0;
    return coarsen(fine, "classical",
                   {{"I", std::move(identity), Matrix::Identity(2, 2)},
                    {"N", std::move(x), x_matrix}});
  }();
  return coarsening;
}

BasisPtr basis_by_id(std::string_view id) {
  if (id == "standard") return standard_basis();
  if (id == "graph") return graph_coarsening().basis;
  if (id == "classical") return classical_coarsening().basis;
  throw Error(ErrorKind::Lookup, "unknown gate basis '" + std::string(id) + "'");
}

}  // namespace qcx
