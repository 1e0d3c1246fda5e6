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


#include "qcx/bounds.hpp"

#include <bit>
#include <cmath>

#include "qcx/graph.hpp"
#include "qcx/synth.hpp"

namespace qcx {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::RawLength: return "raw_length";
    case Method::Compressed: return "compressed";
    case Method::MinOverCandidates: return "min_over_candidates";
    case Method::Formula: return "formula";
  }
  return "?";
}

ComplexityEstimate raw_length_bound(const EncodedString& s) {
  ComplexityEstimate e;
  e.method = Method::RawLength;
  e.bits = static_cast<double>(s.raw_bits());
  e.basis_id = s.basis_id;
  e.code_id = s.code_id;
  return e;
}

ComplexityEstimate compressed_bound(const EncodedString& s, std::string_view compressor) {
  ComplexityEstimate e;
  e.method = Method::Compressed;
  e.bits = static_cast<double>(compressed_bits(pack_bits(s), compressor));
  e.basis_id = s.basis_id;
  e.code_id = s.code_id;
  e.compressor_id = std::string(compressor);
  e.header_bits = header_constant_bits(compressor);
  return e;
}

// ---------------------------------------------------------------------------

CandidateReport min_over_candidates(const StateVector& phi, double epsilon,
                                    const std::vector<Generator>& generators,
                                    std::string_view code_id, std::string_view compressor) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::Domain, "precision must lie in [0, 1)");
  }
  validate_compressor(compressor);
  std::vector<CandidateRecord> records;
  std::optional<std::size_t> best;
  std::optional<Circuit> best_circuit;
  std::optional<EncodedString> best_string;
  std::optional<ComplexityEstimate> best_estimate;
  std::size_t accepted = 0;
  for (const auto& gen : generators) {
    CandidateRecord rec;
    rec.generator = gen.id;
    try {
      std::optional<Circuit> c = gen.make(phi, epsilon);
      if (!c) {
        rec.reason = "not applicable";
      } else if (c->num_qubits() != phi.num_qubits()) {
        rec.reason = "wrong register size";
      } else {
        rec.fidelity = fidelity(run(*c), phi);
        if (!prepares_with_precision(*c, phi, epsilon)) {
          rec.reason = "precision";
        } else {
          EncodedString s = encode(*c, code_by_id(code_id, c->basis()), gen.id);
          ComplexityEstimate e = compressed_bound(s, compressor);
          rec.accepted = true;
          rec.bits = e.bits;
          ++accepted;
          if (!best_estimate || e.bits < best_estimate->bits) {
            best = records.size();
            best_circuit = std::move(c);
            best_string = std::move(s);
            best_estimate = std::move(e);
          }
        }
      }
    } catch (const Error& err) {
      rec.reason = "error: " + std::string(to_string(err.kind())) + ": " + err.what();
    }
    records.push_back(std::move(rec));
  }
  if (!best) {
    std::string why;
    for (const auto& r : records) why += (why.empty() ? "" : "; ") + r.generator + " (" + r.reason + ")";
    throw Error(ErrorKind::EmptyCandidates,
                "no candidate prepares the state within epsilon" + (why.empty() ? "" : ": " + why));
  }
  ComplexityEstimate est = *best_estimate;
  est.method = Method::MinOverCandidates;
  est.epsilon = epsilon;
  est.candidate_count = accepted;
  return {std::move(est), std::move(records), *best, std::move(*best_circuit), std::move(*best_string)};
}

// ---------------------------------------------------------------------------

namespace {

/// Appends an X on qubit q in whatever form the basis offers.
bool append_not(Circuit& c, int q) {
  const GateBasis& b = *c.basis();
  if (b.find("N")) {
    c.append("N", {q});
  } else if (b.find("H") && b.find("S")) {
    c.append("H", {q}).append("S", {q}).append("S", {q}).append("H", {q});
  } else {
    return false;
  }
  return true;
}

/// Graph whose state is b, if any (b given up to global phase).
std::optional<Graph> graph_of(const std::vector<Complex>& b, int n) {
  const std::size_t dim = b.size();
  const double expected = 1.0 / std::sqrt(static_cast<double>(dim));
  constexpr double kTol = 1e-9;
  if (std::abs(std::abs(b[0]) - expected) > kTol) return std::nullopt;
  const Complex phase = b[0] / std::abs(b[0]);
  const auto sign = [&](std::size_t k) -> int {
    const Complex v = b[k] / phase;
    if (std::abs(v - expected) <= kTol) return 1;
    if (std::abs(v + expected) <= kTol) return -1;
    return 0;
  };
  const auto bit = [&](int q) { return std::size_t{1} << (n - 1 - q); };
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      const int s = sign(bit(a) | bit(c));
      if (s == 0) return std::nullopt;
      if (s < 0) g.add_edge(a, c);
    }
  }
  std::vector<std::size_t> masks(static_cast<std::size_t>(n), 0);
  for (const auto& [a, c] : g.edges()) {
    masks[static_cast<std::size_t>(a)] |= bit(c);
  }
  for (std::size_t k = 0; k < dim; ++k) {
    int parity = 0;
    for (int a = 0; a < n; ++a) {
      if (k & bit(a)) parity ^= std::popcount(k & masks[static_cast<std::size_t>(a)]) & 1;
    }
    if (sign(k) != (parity ? -1 : 1)) return std::nullopt;
  }
  return g;
}

}  // namespace

Generator trivial_generator(const BasisPtr& basis) {
  return {"trivial", [basis](const StateVector& phi, double epsilon) -> std::optional<Circuit> {
            if (std::norm(phi[0]) < 1.0 - epsilon) return std::nullopt;
            return Circuit(basis, phi.num_qubits());
          }};
}

Generator classical_generator(const BasisPtr& basis) {
  return {"classical", [basis](const StateVector& phi, double epsilon) -> std::optional<Circuit> {
            std::size_t j = 0;
            for (std::size_t k = 1; k < phi.dimension(); ++k) {
              if (std::norm(phi[k]) > std::norm(phi[j])) j = k;
            }
            if (std::norm(phi[j]) < 1.0 - epsilon) return std::nullopt;
            const int n = phi.num_qubits();
            Circuit c(basis, n);
            const bool positional = basis->find("I") != nullptr;
            for (int q = 0; q < n; ++q) {
              if (j >> (n - 1 - q) & 1u) {
                if (!append_not(c, q)) return std::nullopt;
              } else if (positional) {
                c.append("I", {q});
              }
            }
            return c;
          }};
}

Generator graph_generator(const BasisPtr& basis) {
  return {"graph", [basis](const StateVector& phi, double) -> std::optional<Circuit> {
            const int n = phi.num_qubits();
            if (n > kGraphSearchQubits) return std::nullopt;
            const bool coarse = basis->id() == graph_coarsening().basis->id();
            if (!coarse && basis->id() != standard_basis()->id()) return std::nullopt;
            // Walk the H patterns in Gray-code order, one H per step.
            std::vector<Complex> amps(phi.amplitudes().begin(), phi.amplitudes().end());
            Matrix h(2, 2);
            h << 1.0, 1.0, 1.0, -1.0;
            h /= std::sqrt(2.0);
            std::uint32_t mask = 0;
            for (std::uint32_t i = 0; i < (1u << n); ++i) {
              if (i > 0) {
                const int q = std::countr_zero(i);
                const int target[] = {q};
                detail::apply_matrix(amps, n, h, target);
                mask ^= 1u << q;
              }
              if (auto g = graph_of(amps, n)) {
                Circuit c = graph_state_circuit(*g, !coarse);
                for (int q = 0; q < n; ++q) {
                  if (mask >> q & 1u) c.append("H", {q});
                }
                return c;
              }
            }
            return std::nullopt;
          }};
}

Generator separable_generator(const BasisPtr& basis, const SkParams& params) {
  return {"separable",
          [basis, params](const StateVector& phi, double epsilon) -> std::optional<Circuit> {
            auto parts = product_factors(phi);
            if (parts.size() < 2) return std::nullopt;
            return separable_circuit(parts, basis, epsilon, params).circuit;
          }};
}

Generator generic_generator(const BasisPtr& basis, const SkParams& params) {
  return {"generic",
          [basis, params](const StateVector& phi, double epsilon) -> std::optional<Circuit> {
            return compile_state(phi, basis, epsilon, params).circuit;
          }};
}

Generator generator_by_id(std::string_view id, const BasisPtr& basis, const SkParams& params) {
  if (id == "trivial") return trivial_generator(basis);
  if (id == "classical") return classical_generator(basis);
  if (id == "graph") return graph_generator(basis);
  if (id == "separable") return separable_generator(basis, params);
  if (id == "generic") return generic_generator(basis, params);
  throw Error(ErrorKind::Lookup, "unknown generator '" + std::string(id) + "'");
}

std::vector<Generator> default_generators(const BasisPtr& basis, const SkParams& params) {
  return {trivial_generator(basis), classical_generator(basis), graph_generator(basis),
          separable_generator(basis, params), generic_generator(basis, params)};
}

std::vector<StateVector> product_factors(const StateVector& phi, double tolerance) {
  std::vector<StateVector> out;
  std::vector<Complex> rest(phi.amplitudes().begin(), phi.amplitudes().end());
  int n = phi.num_qubits();
  while (n > 1) {
    bool split = false;
    for (int q = 1; q < n && !split; ++q) {
      const std::size_t rows = std::size_t{1} << q;
      const std::size_t cols = std::size_t{1} << (n - q);
      // rest as a rows x cols matrix, row-major (row = first q qubits).
      std::size_t best = 0;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (std::norm(rest[k]) > std::norm(rest[best])) best = k;
      }
      const std::size_t jc = best % cols;
      std::vector<Complex> u(rows);
      double norm = 0.0;
      for (std::size_t r = 0; r < rows; ++r) {
        u[r] = rest[r * cols + jc];
        norm += std::norm(u[r]);
      }
      norm = std::sqrt(norm);
      for (auto& x : u) x /= norm;
      std::vector<Complex> v(cols, Complex{0.0, 0.0});
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t col = 0; col < cols; ++col) v[col] += std::conj(u[r]) * rest[r * cols + col];
      }
      double residual = 0.0;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t col = 0; col < cols; ++col) {
          residual += std::norm(rest[r * cols + col] - u[r] * v[col]);
        }
      }
      if (std::sqrt(residual) <= tolerance) {
        out.push_back(StateVector::normalized(std::move(u)));
        rest = std::move(v);
        n -= q;
        split = true;
      }
    }
    if (!split) break;
  }
  out.push_back(StateVector::normalized(std::move(rest)));
  return out;
}

}  // namespace qcx
