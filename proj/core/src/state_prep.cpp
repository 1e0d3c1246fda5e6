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


#include <bit>
#include <cmath>
#include <numbers>
#include <optional>

#include "qcx/synth.hpp"

namespace qcx {

namespace {

// Amplitudes this small carry no phase or angle information.
constexpr double kNegligible = 1e-12;
constexpr double kZeroAngle = 1e-12;

struct Level {
  std::vector<double> theta;    // Ry angle per control value
  std::vector<double> psi;      // Rz angle per control value
  std::vector<bool> defined;    // false where the pair has no weight
};

/// Splits a on its last qubit into parent amplitudes and per-pair angles.
Level disentangle(const std::vector<Complex>& a, std::vector<Complex>& parent) {
  const std::size_t half = a.size() / 2;
  Level lv{std::vector<double>(half, 0.0), std::vector<double>(half, 0.0),
           std::vector<bool>(half, false)};
  parent.assign(half, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < half; ++k) {
    const Complex a0 = a[2 * k];
    const Complex a1 = a[2 * k + 1];
    const double m0 = std::abs(a0);
    const double m1 = std::abs(a1);
    const double r = std::hypot(m0, m1);
    if (r < kNegligible) continue;
    lv.defined[k] = true;
    lv.theta[k] = 2.0 * std::atan2(m1, m0);
    double chi = 0.0;
    if (m1 < kNegligible) {
      chi = std::arg(a0);
    } else if (m0 < kNegligible) {
      chi = std::arg(a1);
    } else {
      chi = (std::arg(a0) + std::arg(a1)) / 2.0;
      lv.psi[k] = std::arg(a1) - std::arg(a0);
    }
    parent[k] = std::polar(r, chi);
  }
  return lv;
}

/// Bit p of the control value belongs to qubit controls - 1 - p.
int control_qubit(int controls, int bit) { return controls - 1 - bit; }

/// Solves f(k) = c xor popcount(s & k) mod 2 over the defined entries, with
/// f(k) = 1 for theta = pi and 0 for theta = 0. Returns (c, s).
std::optional<std::pair<bool, std::uint32_t>> affine_pattern(const Level& lv, int controls) {
  // Rows: bit 0 = constant term, bits 1..controls = s, bit 31 = rhs.
  std::vector<std::uint32_t> rows;
  for (std::size_t k = 0; k < lv.theta.size(); ++k) {
    if (!lv.defined[k]) continue;
    bool one;
    if (std::abs(lv.theta[k]) < kZeroAngle) {
      one = false;
    } else if (std::abs(lv.theta[k] - std::numbers::pi) < kZeroAngle) {
      one = true;
    } else {
      return std::nullopt;
    }
    rows.push_back(1u | (static_cast<std::uint32_t>(k) << 1) | (one ? 1u << 31 : 0u));
  }
  const int vars = controls + 1;
  std::vector<int> pivot_row(vars, -1);
  std::size_t rank = 0;
  for (int v = 0; v < vars && rank < rows.size(); ++v) {
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p] >> v & 1u)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] >> v & 1u)) rows[r] ^= rows[rank];
    }
    pivot_row[v] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r] >> 31) return std::nullopt;  // 0 = 1
  }
  std::uint32_t x = 0;  // free variables stay 0
  for (int v = 0; v < vars; ++v) {
    if (pivot_row[v] >= 0 && (rows[static_cast<std::size_t>(pivot_row[v])] >> 31)) x |= 1u << v;
  }
  return std::make_pair(static_cast<bool>(x & 1u), x >> 1);
}

class Emitter {
 public:
  explicit Emitter(ContinuousCircuit& out) : out_(out) {}

  /// Uniformly controlled rotation on `target` with controls 0..target-1.
  void multiplexed(ContinuousKind kind, const std::vector<double>& angles, int target) {
    const int t = target;
    const std::size_t n = angles.size();
    // alpha_i = 2^-t sum_k (-1)^{k . gray(i)} angles_k: a Walsh-Hadamard
    // transform read out in Gray-code order.
    std::vector<double> walsh = angles;
    for (std::size_t len = 1; len < n; len <<= 1) {
      for (std::size_t i = 0; i < n; i += 2 * len) {
        for (std::size_t j = i; j < i + len; ++j) {
          const double u = walsh[j];
          const double v = walsh[j + len];
          walsh[j] = u + v;
          walsh[j + len] = u - v;
        }
      }
    }
    std::uint32_t pending = 0;  // control bits whose CNOT is still owed
    for (std::size_t i = 0; i < n; ++i) {
      const double alpha = walsh[i ^ (i >> 1)] / static_cast<double>(n);
      if (std::abs(alpha) > kZeroAngle) {
        flush(pending, t);
        pending = 0;
        out_.append({kind, alpha, {t}});
      }
      if (t > 0) {
        const int bit = (i + 1 == n) ? t - 1 : std::countr_zero(static_cast<std::uint32_t>(i + 1));
        pending ^= 1u << bit;
      }
    }
    flush(pending, t);
  }

  /// Ry(pi) when c, then a CNOT from every control bit in s.
  void affine(bool c, std::uint32_t s, int target) {
    if (c) out_.ry(std::numbers::pi, target);
    flush(s, target);
  }

 private:
  void flush(std::uint32_t bits, int target) {
    for (int b = target - 1; b >= 0; --b) {
      if (bits >> b & 1u) out_.cnot(control_qubit(target, b), target);
    }
  }

  ContinuousCircuit& out_;
};

}  // namespace

ContinuousCircuit prepare_state_exact(const StateVector& phi) {
  const int n = phi.num_qubits();
  std::vector<std::vector<Complex>> stack;
  stack.emplace_back(phi.amplitudes().begin(), phi.amplitudes().end());
  std::vector<Level> levels(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    std::vector<Complex> parent;
    levels[static_cast<std::size_t>(q)] = disentangle(stack.back(), parent);
    stack.push_back(std::move(parent));
  }

  ContinuousCircuit out(n);
  Emitter emit(out);
  for (int q = 0; q < n; ++q) {
    const Level& lv = levels[static_cast<std::size_t>(q)];
    if (auto pattern = affine_pattern(lv, q)) {
      emit.affine(pattern->first, pattern->second, q);
    } else {
      emit.multiplexed(ContinuousKind::Ry, lv.theta, q);
    }
    emit.multiplexed(ContinuousKind::Rz, lv.psi, q);
  }
  return out;
}

}  // namespace qcx
