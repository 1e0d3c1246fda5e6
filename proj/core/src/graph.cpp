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


#include "qcx/graph.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace qcx {

Graph::Graph(int num_vertices) : n_(num_vertices) {
  if (n_ < 1) throw Error(ErrorKind::Size, "graph needs at least one vertex");
  if (n_ > kDefaultMaxQubits) {
    throw Error(ErrorKind::Size, "graph has more vertices than the simulator supports");
  }
}

Graph& Graph::add_edge(int a, int b) {
  if (weighted()) throw Error(ErrorKind::Domain, "weighted graph needs a phase on every edge");
  insert(a, b);
  return *this;
}

Graph& Graph::add_edge(int a, int b, double phase) {
  if (!edges_.empty() && !weighted()) {
    throw Error(ErrorKind::Domain, "cannot add a weighted edge to an unweighted graph");
  }
  if (!std::isfinite(phase)) throw Error(ErrorKind::Domain, "edge phase must be finite");
  insert(a, b);
  weights_[edges_.back()] = phase;
  return *this;
}

void Graph::insert(int a, int b) {
  if (a == b) throw Error(ErrorKind::Domain, "self-loop on vertex " + std::to_string(a));
  const std::vector<int> t{a, b};
  detail::validate_targets(n_, t);
  const Edge e = std::minmax(a, b);
  for (const auto& f : edges_) {
    if (f == e) throw Error(ErrorKind::Domain, "duplicate edge");
  }
  edges_.push_back(e);
}

double Graph::phase(const Edge& e) const {
  if (!weighted()) return std::numbers::pi;
  auto it = weights_.find(std::minmax(e.first, e.second));
  if (it == weights_.end()) throw Error(ErrorKind::Lookup, "edge not in graph");
  return it->second;
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw Error(ErrorKind::Domain, "mask has bits beyond the vertex pairs");
  }
  int bit = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n && bit < 64; ++b, ++bit) {
      if (mask >> bit & 1u) g.add_edge(a, b);
    }
  }
  return g;
}

Circuit graph_state_circuit(const Graph& g, bool exact_cz) {
  if (g.weighted()) {
    throw Error(ErrorKind::Domain, "weighted graph: use weighted_graph_state_circuit");
  }
  const Coarsening& coarse = graph_coarsening();
  Circuit c(coarse.basis, g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) c.append("H", {v});
  for (const auto& [a, b] : g.edges()) c.append("CZ", {a, b});
  return exact_cz ? expand(c, coarse.dictionary) : c;
}

ContinuousCircuit weighted_graph_state_circuit(const Graph& g) {
  if (!g.weighted() && !g.edges().empty()) {
    throw Error(ErrorKind::Domain, "every edge of a weighted graph needs a phase");
  }
  ContinuousCircuit c(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) c.h(v);
  for (const auto& e : g.edges()) c.cphase(g.phase(e), e.first, e.second);
  return c;
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    const auto fail = [&](const std::string& why) {
      return ParseError(line_no, "line " + std::to_string(line_no) + ": " + why);
    };
    const auto integer = [&](const std::string& s) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw fail("expected integer, got '" + s + "'");
      return v;
    };
    try {
      if (!g) {
        if (tok.size() != 2 || tok[0] != "vertices") throw fail("expected 'vertices N'");
        g.emplace(integer(tok[1]));
        continue;
      }
      if (tok[0] != "edge" || (tok.size() != 3 && tok.size() != 4)) {
        throw fail("expected 'edge a b [phase]'");
      }
      const int a = integer(tok[1]);
      const int b = integer(tok[2]);
      if (tok.size() == 4) {
        double phase = 0.0;
        const auto [ptr, ec] = std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), phase);
        if (ec != std::errc() || ptr != tok[3].data() + tok[3].size()) {
          throw fail("bad phase '" + tok[3] + "'");
        }
        g->add_edge(a, b, phase);
      } else {
        g->add_edge(a, b);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  if (!g) throw ParseError(line_no, "missing 'vertices' header");
  return std::move(*g);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << e.first << ' ' << e.second;
    if (g.weighted()) out << ' ' << std::setprecision(17) << g.phase(e);
    out << '\n';
  }
}

}  // namespace qcx
