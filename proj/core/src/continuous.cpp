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


#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qcx/synth.hpp"

namespace qcx {

ContinuousCircuit::ContinuousCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits_ < 1) throw Error(ErrorKind::Size, "circuit needs at least one qubit");
}

ContinuousCircuit& ContinuousCircuit::rx(double angle, int target) {
  return append({ContinuousKind::Rx, angle, {target}});
}
ContinuousCircuit& ContinuousCircuit::ry(double angle, int target) {
  return append({ContinuousKind::Ry, angle, {target}});
}
ContinuousCircuit& ContinuousCircuit::rz(double angle, int target) {
  return append({ContinuousKind::Rz, angle, {target}});
}
ContinuousCircuit& ContinuousCircuit::h(int target) {
  return append({ContinuousKind::H, 0.0, {target}});
}
ContinuousCircuit& ContinuousCircuit::cnot(int control, int target) {
  return append({ContinuousKind::Cnot, 0.0, {control, target}});
}
ContinuousCircuit& ContinuousCircuit::cphase(double angle, int a, int b) {
  return append({ContinuousKind::CPhase, angle, {a, b}});
}

namespace {
void check_shape(const ContinuousOp& op) {
  const std::size_t arity =
      (op.kind == ContinuousKind::Cnot || op.kind == ContinuousKind::CPhase) ? 2 : 1;
  if (op.targets.size() != arity) {
    throw Error(ErrorKind::Dimension, "wrong number of targets for continuous gate");
  }
  if (!std::isfinite(op.angle)) throw Error(ErrorKind::Domain, "rotation angle must be finite");
}
}  // namespace

ContinuousCircuit& ContinuousCircuit::append(const ContinuousOp& op) {
  check_shape(op);
  detail::validate_targets(num_qubits_, op.targets);
  ops_.push_back(op);
  return *this;
}

std::size_t ContinuousCircuit::continuous_count() const {
  std::size_t n = 0;
  for (const auto& op : ops_) {
    n += op.kind != ContinuousKind::H && op.kind != ContinuousKind::Cnot;
  }
  return n;
}

UnitaryMatrix op_matrix(const ContinuousOp& op) {
  check_shape(op);
  const Complex i{0.0, 1.0};
  const double c = std::cos(op.angle / 2.0);
  const double s = std::sin(op.angle / 2.0);
  Matrix m;
  switch (op.kind) {
    case ContinuousKind::Rx:
      m = Matrix(2, 2);
      m << c, -i * s, -i * s, c;
      break;
    case ContinuousKind::Ry:
      m = Matrix(2, 2);
      m << c, -s, s, c;
      break;
    case ContinuousKind::Rz:
      m = Matrix(2, 2);
      m << std::exp(-i * (op.angle / 2.0)), 0.0, 0.0, std::exp(i * (op.angle / 2.0));
      break;
    case ContinuousKind::H:
      m = Matrix(2, 2);
      m << 1.0, 1.0, 1.0, -1.0;
      m /= std::sqrt(2.0);
      break;
    case ContinuousKind::Cnot:
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      break;
    case ContinuousKind::CPhase:
      m = Matrix::Identity(4, 4);
      m(3, 3) = std::exp(-i * op.angle);
      break;
  }
  return UnitaryMatrix(std::move(m));
}

StateVector run(const ContinuousCircuit& c, int max_qubits) {
  if (c.num_qubits() > max_qubits) {
    throw Error(ErrorKind::Size, "circuit register exceeds the simulator limit");
  }
  std::vector<Complex> amps(std::size_t{1} << c.num_qubits(), Complex{0.0, 0.0});
  amps[0] = 1.0;
  for (const auto& op : c.ops()) {
    detail::apply_matrix(amps, c.num_qubits(), op_matrix(op).matrix(), op.targets);
  }
  return StateVector::normalized(std::move(amps), max_qubits);
}

// ---------------------------------------------------------------------------

namespace {

const char* kind_name(ContinuousKind k) {
  switch (k) {
    case ContinuousKind::Rx: return "rx";
    case ContinuousKind::Ry: return "ry";
    case ContinuousKind::Rz: return "rz";
    case ContinuousKind::H: return "H";
    case ContinuousKind::Cnot: return "CNOT";
    case ContinuousKind::CPhase: return "cphase";
  }
  return "?";
}

bool has_angle(ContinuousKind k) {
  return k != ContinuousKind::H && k != ContinuousKind::Cnot;
}

}  // namespace

void write_continuous(std::ostream& out, const ContinuousCircuit& c) {
  out << "qubits " << c.num_qubits() << '\n' << "basis continuous\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& op : c.ops()) {
    line.str("");
    line << kind_name(op.kind);
    if (has_angle(op.kind)) line << ' ' << op.angle;
    for (int t : op.targets) line << ' ' << t;
    out << line.str() << '\n';
  }
}

std::string to_text(const ContinuousCircuit& c) {
  std::ostringstream out;
  write_continuous(out, c);
  return out.str();
}

ContinuousCircuit read_continuous(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int stage = 0;
  std::optional<ContinuousCircuit> circuit;
  int qubits = 0;
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
    const auto number = [&](const std::string& s) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw fail("bad number '" + s + "'");
      return v;
    };
    const auto integer = [&](const std::string& s) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw fail("expected integer, got '" + s + "'");
      return v;
    };
    if (stage == 0) {
      if (tok.size() != 2 || tok[0] != "qubits") throw fail("expected 'qubits N'");
      qubits = integer(tok[1]);
      if (qubits < 1) throw fail("qubit count must be positive");
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (tok.size() != 2 || tok[0] != "basis" || tok[1] != "continuous") {
        throw fail("expected 'basis continuous'");
      }
      circuit.emplace(qubits);
      stage = 2;
      continue;
    }
    ContinuousOp op{ContinuousKind::H, 0.0, {}};
    bool found = false;
    for (auto k : {ContinuousKind::Rx, ContinuousKind::Ry, ContinuousKind::Rz, ContinuousKind::H,
                   ContinuousKind::Cnot, ContinuousKind::CPhase}) {
      if (tok[0] == kind_name(k)) {
        op.kind = k;
        found = true;
      }
    }
    if (!found) throw fail("unknown gate '" + tok[0] + "'");
    std::size_t next = 1;
    if (has_angle(op.kind)) {
      if (tok.size() < 2) throw fail("missing angle");
      op.angle = number(tok[1]);
      next = 2;
    }
    for (std::size_t k = next; k < tok.size(); ++k) op.targets.push_back(integer(tok[k]));
    try {
      circuit->append(op);
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits' or 'basis' header");
  return std::move(*circuit);
}

ContinuousCircuit parse_continuous(const std::string& text) {
  std::istringstream in(text);
  return read_continuous(in);
}

}  // namespace qcx
