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
 * Dense N-qubit statevectors and small unitary matrices.
 *
 * Amplitudes are stored big-endian: qubit 0 is the most significant bit of
 * the basis index, so |q0 q1 ... q_{N-1}> lives at index sum q_i 2^(N-1-i).
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcx/error.hpp"

namespace qcx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Global numerical tolerance for normalization and unitarity checks.
inline constexpr double kTolerance = 1e-10;
/// Largest register the dense simulator accepts unless told otherwise.
inline constexpr int kDefaultMaxQubits = 20;

class StateVector {
 public:
  /// Validates length (a power of two, 1..2^max_qubits) and normalization.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes,
                                     int max_qubits = kDefaultMaxQubits);

  /// Normalizes first; throws Domain on a zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes,
                                int max_qubits = kDefaultMaxQubits);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

class UnitaryMatrix {
 public:
  /// Throws NotUnitary unless U U^dagger = I entrywise within `tolerance`,
  /// Dimension unless square with power-of-two size.
  explicit UnitaryMatrix(Matrix m, double tolerance = kTolerance);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  int num_qubits() const noexcept;
  const Matrix& matrix() const noexcept { return m_; }
  UnitaryMatrix adjoint() const;

  /// this * other (other acts first).
  UnitaryMatrix operator*(const UnitaryMatrix& other) const;

 private:
  struct Unchecked {};
  UnitaryMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

StateVector zero_state(int num_qubits, int max_qubits = kDefaultMaxQubits);
StateVector basis_state(int num_qubits, std::uint64_t index,
                        int max_qubits = kDefaultMaxQubits);

/// Applies `u` to the ordered `targets`; targets[0] is the most significant
/// qubit of the gate's own index space. The input is not modified.
StateVector apply_gate(const StateVector& state, const UnitaryMatrix& u,
                       std::span<const int> targets);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Kronecker product, a's qubits first.
StateVector tensor(const StateVector& a, const StateVector& b,
                   int max_qubits = kDefaultMaxQubits);

/// Spectral norm of U - V.
double operator_distance(const UnitaryMatrix& u, const UnitaryMatrix& v);

/// min over theta of the spectral norm of U - e^{i theta} V.
double phase_insensitive_distance(const UnitaryMatrix& u,
                                  const UnitaryMatrix& v);

namespace detail {

// In-place kernel shared by the simulator paths. No validation.
void apply_matrix(std::vector<Complex>& amplitudes, int num_qubits,
                  const Matrix& u, std::span<const int> targets);

void validate_targets(int num_qubits, std::span<const int> targets);

}  // namespace detail

}  // namespace qcx
