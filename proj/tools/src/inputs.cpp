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


// Input loaders for the command line: state specs, graph files, sources.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qcx/cli/cli.hpp"
#include "qcx/circuit.hpp"
#include "qcx/synth.hpp"
#include "text.hpp"

namespace qcx::cli {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return in;
}

int qubit_count(const std::string& s, std::string_view what) {
  const int n = parse_number<int>(s, what);
  if (n < 1 || n > kDefaultMaxQubits) {
    throw Error(ErrorKind::Size, std::string(what) + " must be in 1.." +
                                     std::to_string(kDefaultMaxQubits));
  }
  return n;
}

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& z : a) z = {g(rng), g(rng)};
  return StateVector::normalized(std::move(a));
}

StateVector product_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> one = {{g(rng), g(rng)}, {g(rng), g(rng)}};
  StateVector s = StateVector::normalized(one);
  for (int q = 1; q < n; ++q) {
    one = {{g(rng), g(rng)}, {g(rng), g(rng)}};
    s = tensor(s, StateVector::normalized(one));
  }
  return s;
}

StateVector named_state(const std::vector<std::string>& parts) {
  const std::string& name = parts[0];
  auto arg_count = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw Error(ErrorKind::Parse, "'" + name + "' takes " + std::to_string(k) + " argument(s)");
    }
  };
  if (name == "bell") {
    arg_count(0);
    const double r = std::sqrt(0.5);
    return StateVector::from_amplitudes({r, 0.0, 0.0, r});
  }
  if (name == "random" || name == "product") {
    arg_count(2);
    const int n = qubit_count(parts[1], "qubit count");
    const auto seed = parse_number<std::uint64_t>(parts[2], "seed");
    return name == "random" ? random_state(n, seed) : product_state(n, seed);
  }
  arg_count(1);
  const int n = qubit_count(parts[1], "qubit count");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> a(dim);
  if (name == "zero") {
    a[0] = 1.0;
  } else if (name == "ghz") {
    a[0] = a[dim - 1] = std::sqrt(0.5);
  } else if (name == "plus") {
    for (auto& z : a) z = 1.0 / std::sqrt(static_cast<double>(dim));
  } else if (name == "w") {
    for (int q = 0; q < n; ++q) a[std::size_t{1} << q] = 1.0 / std::sqrt(static_cast<double>(n));
  } else {
    throw Error(ErrorKind::Lookup, "unknown state family '" + name + "'");
  }
  return StateVector::from_amplitudes(std::move(a));
}

}  // namespace

StateVector read_state(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = 0;
  std::vector<Complex> amps;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": " + msg);
    };
    try {
      if (n == 0) {
        if (tok.size() != 2 || tok[0] != "qubits") fail("expected 'qubits N'");
        n = qubit_count(tok[1], "qubit count");
        amps.assign(std::size_t{1} << n, 0.0);
        seen.assign(amps.size(), false);
        continue;
      }
      if (tok.size() != 3) fail("expected 'index re im'");
      const auto idx = parse_number<std::size_t>(tok[0], "index");
      if (idx >= amps.size()) fail("index " + tok[0] + " out of range");
      if (seen[idx]) fail("duplicate index " + tok[0]);
      seen[idx] = true;
      amps[idx] = {parse_number<double>(tok[1], "re"), parse_number<double>(tok[2], "im")};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (n == 0) throw ParseError(lineno, "missing 'qubits N' header");
  return StateVector::from_amplitudes(std::move(amps));
}

void write_state(std::ostream& out, const StateVector& s) {
  std::ostringstream os;
  os.precision(17);
  os << "qubits " << s.num_qubits() << '\n';
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    os << i << ' ' << s[i].real() << ' ' << s[i].imag() << '\n';
  }
  out << os.str();
}

Target load_target(const std::string& spec) {
  namespace fs = std::filesystem;
  Target t;
  const fs::path path(spec);
  if (path.extension() == ".state") {
    auto in = open_input(spec);
    t.id = path.stem().string();
    t.state = read_state(in);
    return t;
  }
  if (path.extension() == ".g") {
    auto in = open_input(spec);
    t.id = path.stem().string();
    t.graph = read_graph(in);
    return t;
  }
  t.id = spec;
  const auto parts = split(spec, ':');
  if (parts[0] == "classical") {
    if (parts.size() != 2 || parts[1].empty()) {
      throw Error(ErrorKind::Parse, "expected classical:BITS");
    }
    if (parts[1].find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorKind::Parse, "classical string must contain only 0 and 1");
    }
    t.bits = parts[1];
    return t;
  }
  t.state = named_state(parts);
  return t;
}

StateVector target_state(const Target& t) {
  if (t.state) return *t.state;
  if (t.graph) {
    return t.graph->weighted() ? run(weighted_graph_state_circuit(*t.graph))
                               : run(graph_state_circuit(*t.graph, false));
  }
  const std::string& x = *t.bits;
  if (x.size() > static_cast<std::size_t>(kDefaultMaxQubits)) {
    throw Error(ErrorKind::Size, "classical string longer than " +
                                     std::to_string(kDefaultMaxQubits) + " bits has no state vector");
  }
  return basis_state(static_cast<int>(x.size()), std::stoull(x, nullptr, 2));
}

WordSource load_source(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "bernoulli") {
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "expected bernoulli:P");
    const double p = parse_number<double>(parts[1], "probability");
    return WordSource::letters({1.0 - p, p}, spec);
  }
  if (parts[0] == "deterministic" && parts.size() == 1) {
    return WordSource::letters({1.0}, spec);
  }
  if (parts[0] == "zero-plus") {
    // |0> with probability 1-P, |+> with probability P
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "expected zero-plus:P");
    const double p = parse_number<double>(parts[1], "probability");
    const double r = std::sqrt(0.5);
    return WordSource::states(
        {StateVector::from_amplitudes({1.0, 0.0}), StateVector::from_amplitudes({r, r})},
        {1.0 - p, p}, spec);
  }

  auto in = open_input(spec);
  std::string line, kind, id = std::filesystem::path(spec).stem().string();
  std::size_t lineno = 0;
  std::vector<double> probs;
  std::vector<std::string> words;
  std::vector<StateVector> states;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    try {
      if (kind.empty()) {
        if (tok.size() != 1 || (tok[0] != "letters" && tok[0] != "words" && tok[0] != "states")) {
          throw Error(ErrorKind::Parse, "expected 'letters', 'words' or 'states'");
        }
        kind = tok[0];
      } else if (tok[0] == "id" && tok.size() == 2) {
        id = tok[1];
      } else if (kind == "letters") {
        if (tok.size() != 1) throw Error(ErrorKind::Parse, "expected a probability");
        probs.push_back(parse_number<double>(tok[0], "probability"));
      } else if (kind == "words") {
        if (tok.size() != 2) throw Error(ErrorKind::Parse, "expected 'BITS p'");
        words.push_back(tok[0]);
        probs.push_back(parse_number<double>(tok[1], "probability"));
      } else {
        if (tok.size() < 5 || tok.size() % 2 == 0) {
          throw Error(ErrorKind::Parse, "expected 'p re0 im0 re1 im1 ...'");
        }
        probs.push_back(parse_number<double>(tok[0], "probability"));
        std::vector<Complex> a;
        for (std::size_t i = 1; i < tok.size(); i += 2) {
          a.emplace_back(parse_number<double>(tok[i], "re"), parse_number<double>(tok[i + 1], "im"));
        }
        states.push_back(StateVector::from_amplitudes(std::move(a)));
      }
    } catch (const Error& e) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (kind.empty()) throw ParseError(lineno, "empty source file");
  if (kind == "letters") return WordSource::letters(std::move(probs), id);
  if (kind == "words") return WordSource::words(std::move(words), std::move(probs), id);
  return WordSource::states(std::move(states), std::move(probs), id);
}

}  // namespace qcx::cli
