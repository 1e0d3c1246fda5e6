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
 * I.i.d. sources of letters, words, or pure states, and the
 * entropy-versus-compressed-length experiments built on them.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qcx/bounds.hpp"
#include "qcx/statevec.hpp"

namespace qcx {

enum class SourceKind { ClassicalLetters, ClassicalWords, QuantumStates };

class WordSource {
 public:
  /// Letters "0", "1", ... with the given probabilities.
  static WordSource letters(std::vector<double> probs, std::string id = "");
  /// Words over {'0','1'} of a common length.
  static WordSource words(std::vector<std::string> words, std::vector<double> probs,
                          std::string id = "");
  static WordSource states(std::vector<StateVector> states, std::vector<double> probs,
                           std::string id = "");

  SourceKind kind() const noexcept { return kind_; }
  const std::string& id() const noexcept { return id_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  /// Letters and words only.
  const std::vector<std::string>& words() const noexcept { return words_; }
  /// Quantum sources only.
  const std::vector<StateVector>& states() const noexcept { return states_; }
  /// Common word length l (1 for letters, 0 for quantum sources).
  int word_length() const noexcept { return word_length_; }
  /// ceil(log2 #D) bits per emitted index.
  int index_width() const noexcept;

 private:
  WordSource() = default;
  void check_probs() const;

  SourceKind kind_ = SourceKind::ClassicalLetters;
  std::string id_;
  std::vector<double> probs_;
  std::vector<std::string> words_;
  std::vector<StateVector> states_;
  int word_length_ = 0;
};

/// -sum p log2 p with 0 log 0 = 0. Throws Domain on an invalid distribution.
double shannon_entropy(std::span<const double> probs);

/// m i.i.d. indices; identical seeds give identical sequences.
std::vector<std::uint32_t> sample_sentence(const WordSource& src, std::size_t m, std::uint64_t seed);

/// Seed of trial `trial` under `master` (counter-based derivation).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Indices at `width` bits each, most significant bit first, zero padded.
std::vector<std::uint8_t> pack_indices(std::span<const std::uint32_t> indices, int width);
/// Emitted words (or letters) concatenated as bits.
std::vector<std::uint8_t> pack_sentence(const WordSource& src, std::span<const std::uint32_t> indices);

struct SentenceEstimate {
  double index_bits = 0.0;
  /// min(sum of compressed words, l * #D).
  double dictionary_bits = 0.0;
  double dictionary_compressed = 0.0;
  double dictionary_cap = 0.0;  // l * #D
  double total = 0.0;
  std::size_t header_bits = 0;
};
SentenceEstimate sentence_estimate(std::span<const std::uint32_t> indices, const WordSource& src,
                                   std::string_view compressor = kDefaultCompressor);

struct QuantumMessageEstimate {
  double index_bits = 0.0;
  double dictionary_bits = 0.0;  // sum of per-state min_over_candidates
  std::vector<ComplexityEstimate> per_state;
  /// -#D N^2 2^N log eps.
  double cap = 0.0;
  double total = 0.0;
  std::size_t header_bits = 0;
};
QuantumMessageEstimate quantum_message_estimate(const WordSource& src,
                                                std::span<const std::uint32_t> indices,
                                                double epsilon, const BasisPtr& basis,
                                                const SkParams& params = {},
                                                std::string_view code_id = "one-symbol",
                                                std::string_view compressor = kDefaultCompressor);

struct ExperimentRow {
  std::size_t m = 0;
  std::size_t trial = 0;
  double bits = 0.0;
  double bits_per_emission = 0.0;
  double entropy = 0.0;  // H per emission
  std::string source_id;
  std::uint64_t seed = 0;
};

/// For every m and trial: compressed size of a sampled sentence (emitted
/// letters or words, or indices for quantum sources). Throws Domain unless
/// m_values is strictly increasing.
std::vector<ExperimentRow> entropy_rate_experiment(const WordSource& src,
                                                   const std::vector<std::size_t>& m_values,
                                                   std::size_t trials, std::uint64_t master_seed,
                                                   std::string_view compressor = kDefaultCompressor);

/// Mean bits per emission over the trials of each m, in m order.
std::vector<std::pair<std::size_t, double>> mean_rates(const std::vector<ExperimentRow>& rows);

/// Header "m,trial,bits,bits_per_emission,H,source_id,seed".
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// sum_j p_j |phi_j><phi_j|.
class DensityOperator {
 public:
  explicit DensityOperator(const WordSource& src);
  /// Checks Hermiticity, trace 1, and positivity within 1e-10.
  explicit DensityOperator(Matrix rho);

  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const noexcept { return rho_; }
  std::vector<double> eigenvalues() const;

 private:
  void validate() const;
  Matrix rho_;
};

/// -sum lambda log2 lambda over the eigenvalues.
double von_neumann_entropy(const DensityOperator& rho);

}  // namespace qcx
