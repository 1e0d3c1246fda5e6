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

#include <sstream>

#include "qcx/circuit.hpp"

namespace qcx {

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.num_qubits() << '\n';
  out << "basis " << c.basis()->id() << '\n';
  for (const auto& op : c.ops()) {
    out << op.gate;
    for (int t : op.targets) out << ' ' << t;
    out << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  write_circuit(out, c);
  return out.str();
}

namespace {

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

int parse_int(const std::string& token, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                  token + "'");
  }
}

}  // namespace

Circuit read_circuit(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> qubits;
  std::optional<Circuit> circuit;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);

    const auto fail = [&](const std::string& why) {
      return ParseError(line_no, "line " + std::to_string(line_no) + ": " + why);
    };
    if (!qubits) {
      if (tokens.size() != 2 || tokens[0] != "qubits") throw fail("expected 'qubits N'");
      qubits = parse_int(tokens[1], line_no);
      if (*qubits < 1) throw fail("qubit count must be positive");
      continue;
    }
    if (!circuit) {
      if (tokens.size() != 2 || tokens[0] != "basis") throw fail("expected 'basis <id>'");
      try {
        circuit.emplace(basis_by_id(tokens[1]), *qubits);
      } catch (const Error& e) {
        throw fail(e.what());
      }
      continue;
    }
    std::vector<int> targets;
    for (std::size_t i = 1; i < tokens.size(); ++i) targets.push_back(parse_int(tokens[i], line_no));
    try {
      circuit->append(tokens[0], std::move(targets));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits' or 'basis' header");
  return std::move(*circuit);
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return read_circuit(in);
}

}  // namespace qcx
