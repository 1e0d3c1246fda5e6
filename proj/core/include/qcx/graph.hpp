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
 * Graph and weighted-graph states: H on every vertex, then a controlled
 * phase per edge.
 */
#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcx/circuit.hpp"
#include "qcx/synth.hpp"

namespace qcx {

using Edge = std::pair<int, int>;

/// Simple undirected graph. Edges are stored as (low, high) in insertion
/// order; weights, when present, cover every edge.
class Graph {
 public:
  explicit Graph(int num_vertices);

  /// Throws Domain on self-loops and duplicates, Target on bad vertices, and
  /// Domain when mixing weighted and unweighted edges.
  Graph& add_edge(int a, int b);
  Graph& add_edge(int a, int b, double phase);

  int num_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool weighted() const noexcept { return !weights_.empty(); }
  /// Phase of an edge (pi for unweighted graphs).
  double phase(const Edge& e) const;

  /// Graph number `mask` on n vertices: bit i selects the i-th pair in
  /// lexicographic order (0,1), (0,2), ..., (n-2,n-1).
  static Graph from_mask(int n, std::uint64_t mask);

 private:
  void insert(int a, int b);

  int n_;
  std::vector<Edge> edges_;
  std::map<Edge, double> weights_;
};

/// H on every vertex, then one CZ per edge, over the {H, CZ} basis. With
/// exact_cz the CZs are expanded to H CNOT H over the standard basis.
/// Throws Domain for weighted graphs.
Circuit graph_state_circuit(const Graph& g, bool exact_cz);

/// H on every vertex, then cphase(phi_kl) per edge, where cphase(phi) is
/// exp(-i phi/4 (1 - Z) (x) (1 - Z)) = diag(1, 1, 1, e^{-i phi}). Throws
/// Domain for unweighted graphs.
ContinuousCircuit weighted_graph_state_circuit(const Graph& g);

/// Text format: "vertices N" then "edge a b [phase]" lines; '#' comments.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace qcx
