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


#include <cmath>
#include <map>

#include "qcx/synth.hpp"

namespace qcx {

namespace {

constexpr int kBudgetRetries = 6;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::Domain, "precision must lie in (0, 1)");
  }
}

// A step of the lowered circuit: either a fixed basis gate or a one-qubit
// unitary that still needs an SK word.
struct Step {
  std::string gate;  // empty for SK targets
  std::vector<int> targets;
  ContinuousKind kind = ContinuousKind::H;
  double angle = 0.0;
};

std::vector<Step> lower(const ContinuousCircuit& cc, const GateBasis& basis) {
  const bool has_h = basis.find("H") && basis.at("H").arity == 1;
  const bool has_cnot = basis.find("CNOT") && basis.at("CNOT").arity == 2;
  const bool has_cz = basis.find("CZ") && basis.at("CZ").arity == 2;
  if (!has_cnot && !(has_cz && has_h)) {
    for (const auto& op : cc.ops()) {
      if (op.kind == ContinuousKind::Cnot || op.kind == ContinuousKind::CPhase) {
        throw Error(ErrorKind::Lookup,
                    "basis '" + basis.id() + "' offers neither CNOT nor CZ with H");
      }
    }
  }
  std::vector<Step> steps;
  const auto cnot = [&](int c, int t) {
    if (has_cnot) {
      steps.push_back({"CNOT", {c, t}});
    } else {
      steps.push_back({"H", {t}});
      steps.push_back({"CZ", {c, t}});
      steps.push_back({"H", {t}});
    }
  };
  const auto rotation = [&](ContinuousKind k, double angle, int t) {
    steps.push_back({"", {t}, k, angle});
  };
  for (const auto& op : cc.ops()) {
    switch (op.kind) {
      case ContinuousKind::Rx:
      case ContinuousKind::Ry:
      case ContinuousKind::Rz:
        rotation(op.kind, op.angle, op.targets[0]);
        break;
      case ContinuousKind::H:
        if (has_h) {
          steps.push_back({"H", op.targets});
        } else {
          rotation(ContinuousKind::H, 0.0, op.targets[0]);
        }
        break;
      case ContinuousKind::Cnot:
        cnot(op.targets[0], op.targets[1]);
        break;
      case ContinuousKind::CPhase: {
        // diag(1, 1, 1, e^{i lambda}) with lambda = -phi, up to global phase.
        const double lambda = -op.angle;
        const int a = op.targets[0];
        const int b = op.targets[1];
        rotation(ContinuousKind::Rz, lambda / 2.0, a);
        rotation(ContinuousKind::Rz, lambda / 2.0, b);
        cnot(a, b);
        rotation(ContinuousKind::Rz, -lambda / 2.0, b);
        cnot(a, b);
        break;
      }
    }
  }
  return steps;
}

struct Synthesized {
  Circuit circuit;
  int max_depth = 0;
};

Synthesized synthesize(const std::vector<Step>& steps, const BasisPtr& basis, int num_qubits,
                       const NetPtr& net, double budget, const SkParams& params) {
  Synthesized out{Circuit(basis, num_qubits), 0};
  std::map<std::pair<int, double>, Word> cache;
  for (const auto& s : steps) {
    if (!s.gate.empty()) {
      out.circuit.append(s.gate, s.targets);
      continue;
    }
    const auto key = std::make_pair(static_cast<int>(s.kind), s.angle);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const Mat2 target = op_matrix({s.kind, s.angle, {0}}).matrix();
      const auto levels = sk_levels(target, *net, params.depth, budget);
      if (levels.back().distance > budget) {
        throw Error(ErrorKind::Infeasible,
                    "per-gate budget " + std::to_string(budget) + " not reached at SK depth " +
                        std::to_string(params.depth));
      }
      out.max_depth = std::max(out.max_depth, levels.back().depth);
      it = cache.emplace(key, levels.back().word).first;
    }
    const Word& w = it->second;
    for (auto letter = w.rbegin(); letter != w.rend(); ++letter) {
      out.circuit.append(net->gate_names()[*letter], {s.targets[0]});
    }
  }
  return out;
}

}  // namespace

CompileResult compile_to_basis(const ContinuousCircuit& cc, const BasisPtr& basis,
                               double epsilon, const SkParams& params) {
  check_epsilon(epsilon);
  if (!basis) throw Error(ErrorKind::Domain, "compile_to_basis needs a gate basis");
  if (params.l0 < 1 || params.depth < 0) throw Error(ErrorKind::Domain, "bad SK parameters");
  const auto steps = lower(cc, *basis);
  std::size_t m = 0;
  for (const auto& s : steps) m += s.gate.empty();

  CompileResult result{Circuit(basis, cc.num_qubits()), 0.0, m, 0, std::nullopt};
  NetPtr net;
  if (m > 0) net = shared_net(*basis, params.l0);
  double budget = m > 0 ? std::sqrt(epsilon) / (2.0 * static_cast<double>(m)) : 0.0;
  const bool simulate = cc.num_qubits() <= kCompileSimulationLimit;
  const StateVector reference = simulate ? run(cc) : zero_state(1);
  for (int attempt = 0;; ++attempt) {
    auto synth = synthesize(steps, basis, cc.num_qubits(), net, budget, params);
    result.circuit = std::move(synth.circuit);
    result.per_gate_budget = budget;
    result.max_depth_used = synth.max_depth;
    if (!simulate) return result;
    result.fidelity = fidelity(run(result.circuit), reference);
    if (*result.fidelity >= 1.0 - epsilon) return result;
    if (m == 0 || attempt == kBudgetRetries) {
      throw Error(ErrorKind::Infeasible, "compiled fidelity " + std::to_string(*result.fidelity) +
                                             " stays below 1 - epsilon");
    }
    budget /= 2.0;
  }
}

CompileResult compile_state(const StateVector& phi, const BasisPtr& basis, double epsilon,
                            const SkParams& params) {
  check_epsilon(epsilon);
  if (!basis) throw Error(ErrorKind::Domain, "compile_state needs a gate basis");
  if (phi.num_qubits() == 1) {
    const NetPtr net = shared_net(*basis, params.l0);
    for (const auto& e : net->entries()) {
      const Complex overlap = std::conj(phi[0]) * e.matrix(0, 0) + std::conj(phi[1]) * e.matrix(1, 0);
      if (std::norm(overlap) < 1.0 - epsilon) continue;
      CompileResult r{Circuit(basis, 1), 0.0, 1, 0, std::nullopt};
      for (auto letter = e.word.rbegin(); letter != e.word.rend(); ++letter) {
        r.circuit.append(net->gate_names()[*letter], {0});
      }
      r.fidelity = fidelity(run(r.circuit), phi);
      if (*r.fidelity >= 1.0 - epsilon) return r;
    }
  }
  CompileResult r = compile_to_basis(prepare_state_exact(phi), basis, epsilon, params);
  if (phi.num_qubits() <= kCompileSimulationLimit) r.fidelity = fidelity(run(r.circuit), phi);
  return r;
}

Circuit replicate(const Circuit& c, int copies) {
  if (copies < 1) throw Error(ErrorKind::Domain, "copy count must be >= 1");
  return juxtapose(std::vector<Circuit>(static_cast<std::size_t>(copies), c));
}

Circuit juxtapose(const std::vector<Circuit>& parts) {
  if (parts.empty()) throw Error(ErrorKind::Domain, "nothing to juxtapose");
  int total = 0;
  for (const auto& p : parts) {
    if (p.basis()->id() != parts.front().basis()->id()) {
      throw Error(ErrorKind::Domain, "juxtaposed circuits must share a basis");
    }
    total += p.num_qubits();
  }
  if (total > kDefaultMaxQubits) {
    throw Error(ErrorKind::Size, "combined register exceeds " + std::to_string(kDefaultMaxQubits) +
                                     " qubits");
  }
  Circuit out(parts.front().basis(), total);
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& op : p.ops()) {
      std::vector<int> t = op.targets;
      for (int& q : t) q += offset;
      out.append(op.gate, std::move(t));
    }
    offset += p.num_qubits();
  }
  return out;
}

CompileResult copies_circuit(const StateVector& phi, int copies, const BasisPtr& basis,
                             double epsilon, const SkParams& params) {
  check_epsilon(epsilon);
  if (copies < 1) throw Error(ErrorKind::Domain, "copy count must be >= 1");
  const CompileResult one =
      compile_state(phi, basis, epsilon / (4.0 * static_cast<double>(copies)), params);
  CompileResult r{replicate(one.circuit, copies), one.per_gate_budget,
                  one.continuous_gates * static_cast<std::size_t>(copies), one.max_depth_used,
                  std::nullopt};
  if (r.circuit.num_qubits() <= kCompileSimulationLimit) {
    StateVector target = phi;
    for (int k = 1; k < copies; ++k) target = tensor(target, phi);
    r.fidelity = fidelity(run(r.circuit), target);
  }
  return r;
}

CompileResult separable_circuit(const std::vector<StateVector>& parts, const BasisPtr& basis,
                                double epsilon, const SkParams& params) {
  check_epsilon(epsilon);
  if (parts.empty()) throw Error(ErrorKind::Domain, "separable state needs at least one factor");
  const double each = epsilon / static_cast<double>(parts.size());
  std::vector<Circuit> circuits;
  CompileResult r{Circuit(basis, 1), 0.0, 0, 0, std::nullopt};
  for (const auto& p : parts) {
    CompileResult c = compile_state(p, basis, each, params);
    r.per_gate_budget = std::max(r.per_gate_budget, c.per_gate_budget);
    r.continuous_gates += c.continuous_gates;
    r.max_depth_used = std::max(r.max_depth_used, c.max_depth_used);
    circuits.push_back(std::move(c.circuit));
  }
  r.circuit = juxtapose(circuits);
  if (r.circuit.num_qubits() <= kCompileSimulationLimit) {
    StateVector target = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) target = tensor(target, parts[k]);
    r.fidelity = fidelity(run(r.circuit), target);
  }
  return r;
}

}  // namespace qcx
