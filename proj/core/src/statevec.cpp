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

#include "qcx/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qcx {

namespace {

int qubits_for_dimension(std::size_t dim, int max_qubits) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(ErrorKind::Size, "amplitude count " + std::to_string(dim) +
                                     " is not a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > max_qubits) {
    throw Error(ErrorKind::Size, std::to_string(n) + " qubits exceeds the " +
                                     std::to_string(max_qubits) +
                                     "-qubit simulator limit");
  }
  return n;
}

void check_qubit_count(int n, int max_qubits) {
  if (n < 1 || n > max_qubits) {
    throw Error(ErrorKind::Size, "qubit count " + std::to_string(n) +
                                     " outside [1, " +
                                     std::to_string(max_qubits) + "]");
  }
}

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes,
                                         int max_qubits) {
  const int n = qubits_for_dimension(amplitudes.size(), max_qubits);
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kTolerance) {
    throw Error(ErrorKind::Domain,
                "state is not normalized (|psi|^2 = " + std::to_string(norm) +
                    ")");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes,
                                    int max_qubits) {
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (norm <= 0.0) throw Error(ErrorKind::Domain, "cannot normalize zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) a *= scale;
  return from_amplitudes(std::move(amplitudes), max_qubits);
}

double StateVector::norm_squared() const {
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += std::norm(a);
  return norm;
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1 ||
      !std::has_single_bit(static_cast<std::size_t>(m_.rows()))) {
    throw Error(ErrorKind::Dimension, "gate matrix must be square 2^k x 2^k");
  }
  const Matrix residual = m_ * m_.adjoint() - Matrix::Identity(m_.rows(), m_.cols());
  if (residual.cwiseAbs().maxCoeff() > tolerance) {
    throw Error(ErrorKind::NotUnitary, "matrix is not unitary within tolerance");
  }
}

int UnitaryMatrix::num_qubits() const noexcept {
  return std::countr_zero(static_cast<std::size_t>(m_.rows()));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(m_.adjoint(), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::Dimension, "matrix product of unequal dimensions");
  }
  return UnitaryMatrix(m_ * other.m_, Unchecked{});
}

StateVector zero_state(int num_qubits, int max_qubits) {
  return basis_state(num_qubits, 0, max_qubits);
}

StateVector basis_state(int num_qubits, std::uint64_t index, int max_qubits) {
  check_qubit_count(num_qubits, max_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) {
    throw Error(ErrorKind::Dimension, "basis index out of range");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector::from_amplitudes(std::move(amps), max_qubits);
}

namespace detail {

void validate_targets(int num_qubits, std::span<const int> targets) {
  if (targets.empty()) throw Error(ErrorKind::Target, "gate has no targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits) {
      throw Error(ErrorKind::Target, "target qubit " + std::to_string(targets[i]) +
                                         " out of range for " +
                                         std::to_string(num_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw Error(ErrorKind::Target,
                    "repeated target qubit " + std::to_string(targets[i]));
      }
    }
  }
}

void apply_matrix(std::vector<Complex>& amps, int num_qubits, const Matrix& u,
                  std::span<const int> targets) {
  const std::size_t dim = amps.size();
  const int k = static_cast<int>(targets.size());
  if (k == 1) {
    const std::size_t stride = std::size_t{1} << (num_qubits - 1 - targets[0]);
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const Complex a0 = amps[i];
        const Complex a1 = amps[i + stride];
        amps[i] = u00 * a0 + u01 * a1;
        amps[i + stride] = u10 * a0 + u11 * a1;
      }
    }
    return;
  }

  const std::size_t sub = std::size_t{1} << k;
  std::vector<std::size_t> offsets(sub, 0);
  std::size_t mask = 0;
  for (std::size_t s = 0; s < sub; ++s) {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) {
      if ((s >> (k - 1 - j)) & 1U) {
        off |= std::size_t{1} << (num_qubits - 1 - targets[j]);
      }
    }
    offsets[s] = off;
  }
  for (int j = 0; j < k; ++j) mask |= std::size_t{1} << (num_qubits - 1 - targets[j]);

  std::vector<Complex> in(sub), out(sub);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t s = 0; s < sub; ++s) in[s] = amps[base | offsets[s]];
    for (std::size_t r = 0; r < sub; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < sub; ++c) acc += u(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t s = 0; s < sub; ++s) amps[base | offsets[s]] = out[s];
  }
}

}  // namespace detail

StateVector apply_gate(const StateVector& state, const UnitaryMatrix& u,
                       std::span<const int> targets) {
  detail::validate_targets(state.num_qubits(), targets);
  if (u.dim() != (1 << targets.size())) {
    throw Error(ErrorKind::Dimension,
                "gate dimension " + std::to_string(u.dim()) + " does not match " +
                    std::to_string(targets.size()) + " targets");
  }
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  detail::apply_matrix(amps, state.num_qubits(), u.matrix(), targets);
  return StateVector::from_amplitudes(std::move(amps), state.num_qubits());
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::Dimension, "fidelity of states with different qubit counts");
  }
  Complex overlap{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
  return std::min(1.0, std::norm(overlap));
}

StateVector tensor(const StateVector& a, const StateVector& b, int max_qubits) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > max_qubits) {
    throw Error(ErrorKind::Size, "tensor product of " + std::to_string(n) +
                                     " qubits exceeds the simulator limit");
  }
  std::vector<Complex> amps;
  amps.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return StateVector::from_amplitudes(std::move(amps), max_qubits);
}

double operator_distance(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorKind::Dimension, "distance between matrices of unequal size");
  }
  const Matrix diff = u.matrix() - v.matrix();
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues()(0);
}

// For unitaries, ||U - e^{it}V|| = max_j |1 - e^{i(t + a_j)}| where e^{i a_j}
// are the eigenvalues of U^dagger V. The optimum centres the smallest arc
// containing all eigenphases on 1, giving 2 sin(L/4) for arc length L.
double phase_insensitive_distance(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorKind::Dimension, "distance between matrices of unequal size");
  }
  const Matrix w = u.matrix().adjoint() * v.matrix();
  Eigen::ComplexEigenSolver<Matrix> solver(w, false);
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index i = 0; i < w.rows(); ++i) phases.push_back(std::arg(solver.eigenvalues()(i)));
  std::sort(phases.begin(), phases.end());
  double largest_gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) {
    largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  }
  const double arc = std::max(0.0, 2.0 * std::numbers::pi - largest_gap);
  return 2.0 * std::sin(arc / 4.0);
}

}  // namespace qcx
