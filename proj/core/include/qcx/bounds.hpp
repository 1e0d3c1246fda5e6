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
 * Upper bounds on preparation complexity: raw and compressed lengths of
 * encoded circuits, minimisation over candidate circuits, closed-form
 * bounds, and the counting checks behind them. All logarithms are base 2
 * and all sizes are in bits.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcx/circuit.hpp"
#include "qcx/compress.hpp"
#include "qcx/encode.hpp"
#include "qcx/sk.hpp"
#include "qcx/statevec.hpp"

namespace qcx {

enum class Method { RawLength, Compressed, MinOverCandidates, Formula };

std::string_view to_string(Method m);

struct ComplexityEstimate {
  double bits = 0.0;
  Method method = Method::Formula;
  /// Formula kind for Method::Formula, empty otherwise.
  std::string formula;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  std::string basis_id;
  std::string code_id;
  std::string compressor_id;
  std::size_t candidate_count = 0;
  /// Compressed size of the empty input (compressed methods only).
  std::size_t header_bits = 0;
  /// Named parts of the value, e.g. the log m term of per_copy.
  std::map<std::string, double> terms;
};

ComplexityEstimate raw_length_bound(const EncodedString& s);
ComplexityEstimate compressed_bound(const EncodedString& s,
                                    std::string_view compressor = kDefaultCompressor);

// ---------------------------------------------------------------------------
// Candidates

/// Produces a circuit meant to prepare `phi` within epsilon, or nothing when
/// the generator does not apply to this state.
struct Generator {
  std::string id;
  std::function<std::optional<Circuit>(const StateVector& phi, double epsilon)> make;
};

struct CandidateRecord {
  std::string generator;
  bool accepted = false;
  std::optional<double> fidelity;
  std::optional<double> bits;
  /// Why a candidate was not accepted ("not applicable", "precision", or an
  /// error message).
  std::string reason;
};

struct CandidateReport {
  ComplexityEstimate estimate;
  std::vector<CandidateRecord> candidates;
  /// Index into candidates of the winner; ties go to the lowest index.
  std::size_t winner = 0;
  Circuit circuit;
  /// The winning encoded string.
  EncodedString characterizing;
};

/// Minimum compressed bound over the candidates that pass the precision
/// check. Failing candidates are recorded with their reason. Throws
/// EmptyCandidates when none passes.
CandidateReport min_over_candidates(const StateVector& phi, double epsilon,
                                    const std::vector<Generator>& generators,
                                    std::string_view code_id = "one-symbol",
                                    std::string_view compressor = kDefaultCompressor);

/// Empty circuit when |0...0> is close enough.
Generator trivial_generator(const BasisPtr& basis);
/// NOT gates (H S S H over the standard basis) on a computational basis state.
Generator classical_generator(const BasisPtr& basis);
/// Graph state, possibly with H on some qubits (covers GHZ), by H + CZ.
/// Searches the H pattern for up to kGraphSearchQubits qubits.
Generator graph_generator(const BasisPtr& basis);
/// Splits a product state at every cut with Schmidt rank 1 and compiles the
/// factors separately at epsilon / J.
Generator separable_generator(const BasisPtr& basis, const SkParams& params = {});
/// compile_state.
Generator generic_generator(const BasisPtr& basis, const SkParams& params = {});

inline constexpr int kGraphSearchQubits = 10;

/// "trivial", "classical", "graph", "separable", "generic". Throws Lookup.
Generator generator_by_id(std::string_view id, const BasisPtr& basis, const SkParams& params = {});
/// All of the above in that order.
std::vector<Generator> default_generators(const BasisPtr& basis, const SkParams& params = {});

/// Splits phi into contiguous product factors (finest split).
std::vector<StateVector> product_factors(const StateVector& phi, double tolerance = 1e-9);

// ---------------------------------------------------------------------------
// Closed forms

struct FormulaParams {
  int n = 0;
  double epsilon = 0.0;
  int copies = 1;
  std::vector<int> partition;
  double entropy = 0.0;  // S, qubits of entropy per emitted qubit
  int dictionary_size = 0;
  double index_bits = 0.0;
  int word_length = 0;
};

/// Kinds: preliminary, ball_volume, general, graph_exact, graph_sk,
/// weighted_graph, copies, per_copy, separable, fully_separable, schumacher,
/// sentence. Throws Lookup for an unknown kind and Domain for bad params.
ComplexityEstimate formula_bound(std::string_view kind, const FormulaParams& p);
const std::vector<std::string>& formula_kinds();

double preliminary_bound(int n, double epsilon, bool linear_term = true);
double ball_volume_bound(int n, double epsilon);
double general_bound(int n, double epsilon);
double graph_exact_bound(int n);
double graph_sk_bound(int n, double epsilon);
double weighted_graph_bound(int n, double epsilon);
double copies_bound(int n, int copies, double epsilon);
double separable_bound(const std::vector<int>& partition, double epsilon);
double fully_separable_bound(int n, double epsilon);
double schumacher_bound(int n, double entropy, double epsilon, int dictionary_size);
double sentence_bound(double index_bits, int word_length, int dictionary_size);

// ---------------------------------------------------------------------------
// Counting

/// (2^c - 1) / 2^n.
double incompressible_fraction(int n, double c);

struct NoncomplexFraction {
  double value;    // 2^{N^2 2^N log eps + c}
  double clamped;  // min(value, 1)
};
NoncomplexFraction noncomplex_fraction(int n, double epsilon, double c);

/// Output of a toy-machine description, or nothing when it is malformed.
/// Descriptions are non-empty sequences of
///   0 gamma(k) payload[k]            LITERAL
///   1 gamma(k) gamma(r) payload[k]   REPEAT: payload r times
/// with gamma the Elias gamma code of a positive integer.
std::optional<std::string> run_toy_machine(std::string_view description);

inline constexpr int kCensusCap = 22;

struct CensusResult {
  int c = 0;
  std::uint64_t descriptions = 0;  // all bit strings shorter than c
  std::uint64_t valid = 0;
  std::uint64_t distinct_outputs = 0;
  std::uint64_t bound = 0;  // 2^c - 1
  bool holds = false;
};
/// Throws Domain above kCensusCap.
CensusResult toy_machine_census(int c);

struct VitanyiBound {
  std::uint64_t index = 0;
  double probability = 0.0;
  int description_bits = 0;
  int penalty_bits = 0;
  int total_bits = 0;
  double epsilon_vit = 0.0;  // 1 - 2^-N
};
VitanyiBound vitanyi_bound(const StateVector& phi);

}  // namespace qcx
