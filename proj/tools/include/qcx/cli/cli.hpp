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


#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcx/graph.hpp"
#include "qcx/sources.hpp"
#include "qcx/statevec.hpp"

namespace qcx::cli {

/// Runs the qcx command line (args excludes the program name). Errors are
/// reported on `err` as "error: <kind>: <message>" with a nonzero result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// What a state spec names: a state vector, a graph, or a classical string.
struct Target {
  std::string id;
  std::optional<StateVector> state;
  std::optional<Graph> graph;
  std::optional<std::string> bits;
};

/// Files: *.state ("qubits N" then "index re im" lines), *.g (graph text).
/// Names: bell, ghz:N, plus:N, zero:N, w:N, random:N:SEED,
/// product:N:SEED, classical:BITS.
Target load_target(const std::string& spec);

/// The state a target prepares (graph states built directly).
StateVector target_state(const Target& t);

/// "qubits N" then sparse "index re im" lines; missing indices are 0.
StateVector read_state(std::istream& in);
void write_state(std::ostream& out, const StateVector& s);

/// Files with "letters|words|states" headers, or bernoulli:P, deterministic.
WordSource load_source(const std::string& spec);

}  // namespace qcx::cli
