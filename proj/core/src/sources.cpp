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


#include "qcx/sources.hpp"

#include <cmath>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

namespace qcx {

namespace {

int ceil_log2(std::size_t n) {
  int w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

}  // namespace

void WordSource::check_probs() const {
  if (probs_.empty()) throw Error(ErrorKind::Domain, "source needs at least one entry");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw Error(ErrorKind::Domain, "probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorKind::Domain, "probabilities must sum to 1");
}

WordSource WordSource::letters(std::vector<double> probs, std::string id) {
  WordSource s;
  s.kind_ = SourceKind::ClassicalLetters;
  s.id_ = std::move(id);
  s.probs_ = std::move(probs);
  s.check_probs();
  for (std::size_t i = 0; i < s.probs_.size(); ++i) s.words_.push_back(std::to_string(i));
  s.word_length_ = 1;
  return s;
}

WordSource WordSource::words(std::vector<std::string> words, std::vector<double> probs,
                             std::string id) {
  if (words.size() != probs.size()) {
    throw Error(ErrorKind::Dimension, "one probability per word is required");
  }
  WordSource s;
  s.kind_ = SourceKind::ClassicalWords;
  s.id_ = std::move(id);
  s.probs_ = std::move(probs);
  s.check_probs();
  for (const auto& w : words) {
    if (w.empty() || w.size() != words.front().size()) {
      throw Error(ErrorKind::Domain, "all words must share one non-zero length");
    }
    if (w.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorKind::Domain, "words must be over {0, 1}");
    }
  }
  s.words_ = std::move(words);
  s.word_length_ = static_cast<int>(s.words_.front().size());
  return s;
}

WordSource WordSource::states(std::vector<StateVector> states, std::vector<double> probs,
                              std::string id) {
  if (states.size() != probs.size()) {
    throw Error(ErrorKind::Dimension, "one probability per state is required");
  }
  WordSource s;
  s.kind_ = SourceKind::QuantumStates;
  s.id_ = std::move(id);
  s.probs_ = std::move(probs);
  s.check_probs();
  for (const auto& st : states) {
    if (st.num_qubits() != states.front().num_qubits()) {
      throw Error(ErrorKind::Dimension, "all states must have the same qubit count");
    }
  }
  s.states_ = std::move(states);
  return s;
}

int WordSource::index_width() const noexcept { return ceil_log2(probs_.size()); }

double shannon_entropy(std::span<const double> probs) {
  double sum = 0.0;
  double h = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error(ErrorKind::Domain, "probabilities must be nonnegative");
    sum += p;
    if (p > 0.0) h -= p * std::log2(p);
  }
  if (probs.empty() || std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorKind::Domain, "probabilities must sum to 1");
  }
  return h;
}

std::vector<std::uint32_t> sample_sentence(const WordSource& src, std::size_t m, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::Domain, "sentence length must be >= 1");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint32_t> draw(src.probs().begin(), src.probs().end());
  std::vector<std::uint32_t> out(m);
  for (auto& i : out) i = draw(rng);
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

std::vector<std::uint8_t> pack_indices(std::span<const std::uint32_t> indices, int width) {
  std::vector<std::uint8_t> out((indices.size() * static_cast<std::size_t>(width) + 7) / 8, 0);
  std::size_t bit = 0;
  for (std::uint32_t v : indices) {
    for (int b = width - 1; b >= 0; --b, ++bit) {
      if (v >> b & 1u) out[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_sentence(const WordSource& src, std::span<const std::uint32_t> indices) {
  if (src.kind() != SourceKind::ClassicalWords) return pack_indices(indices, src.index_width());
  const std::size_t l = static_cast<std::size_t>(src.word_length());
  std::vector<std::uint8_t> out((indices.size() * l + 7) / 8, 0);
  std::size_t bit = 0;
  for (std::uint32_t v : indices) {
    for (char ch : src.words().at(v)) {
      if (ch == '1') out[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      ++bit;
    }
  }
  return out;
}

SentenceEstimate sentence_estimate(std::span<const std::uint32_t> indices, const WordSource& src,
                                   std::string_view compressor) {
  if (src.kind() == SourceKind::QuantumStates) {
    throw Error(ErrorKind::Domain, "use quantum_message_estimate for quantum sources");
  }
  for (auto i : indices) {
    if (i >= src.size()) throw Error(ErrorKind::Domain, "index outside the dictionary");
  }
  SentenceEstimate e;
  e.header_bits = header_constant_bits(compressor);
  e.index_bits = static_cast<double>(compressed_bits(pack_indices(indices, src.index_width()), compressor));
  for (std::uint32_t j = 0; j < src.size(); ++j) {
    const std::uint32_t one[] = {j};
    e.dictionary_compressed += static_cast<double>(
        compressed_bits(pack_sentence(src, std::span<const std::uint32_t>(one)), compressor));
  }
  e.dictionary_cap = static_cast<double>(src.word_length()) * static_cast<double>(src.size());
  e.dictionary_bits = std::min(e.dictionary_compressed, e.dictionary_cap);
  e.total = e.index_bits + e.dictionary_bits;
  return e;
}

QuantumMessageEstimate quantum_message_estimate(const WordSource& src,
                                                std::span<const std::uint32_t> indices,
                                                double epsilon, const BasisPtr& basis,
                                                const SkParams& params, std::string_view code_id,
                                                std::string_view compressor) {
  if (src.kind() != SourceKind::QuantumStates) {
    throw Error(ErrorKind::Domain, "quantum_message_estimate needs a quantum source");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::Domain, "precision must lie in (0, 1)");
  for (auto i : indices) {
    if (i >= src.size()) throw Error(ErrorKind::Domain, "index outside the dictionary");
  }
  QuantumMessageEstimate e;
  e.header_bits = header_constant_bits(compressor);
  e.index_bits = static_cast<double>(compressed_bits(pack_indices(indices, src.index_width()), compressor));
  const auto generators = default_generators(basis, params);
  for (const auto& phi : src.states()) {
    auto report = min_over_candidates(phi, epsilon, generators, code_id, compressor);
    e.dictionary_bits += report.estimate.bits;
    e.per_state.push_back(std::move(report.estimate));
  }
  e.cap = static_cast<double>(src.size()) * general_bound(src.states().front().num_qubits(), epsilon);
  e.total = e.index_bits + e.dictionary_bits;
  return e;
}

std::vector<ExperimentRow> entropy_rate_experiment(const WordSource& src,
                                                   const std::vector<std::size_t>& m_values,
                                                   std::size_t trials, std::uint64_t master_seed,
                                                   std::string_view compressor) {
  validate_compressor(compressor);
  if (m_values.empty() || trials < 1) throw Error(ErrorKind::Domain, "need m values and trials >= 1");
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    if (m_values[i] < 1 || (i > 0 && m_values[i] <= m_values[i - 1])) {
      throw Error(ErrorKind::Domain, "m values must be positive and strictly increasing");
    }
  }
  const double h = shannon_entropy(src.probs());
  std::vector<ExperimentRow> rows;
  std::uint64_t counter = 0;
  for (std::size_t m : m_values) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t seed = trial_seed(master_seed, counter++);
      const auto indices = sample_sentence(src, m, seed);
      const double bits = static_cast<double>(compressed_bits(pack_sentence(src, indices), compressor));
      rows.push_back({m, t, bits, bits / static_cast<double>(m), h, src.id(), seed});
    }
  }
  return rows;
}

std::vector<std::pair<std::size_t, double>> mean_rates(const std::vector<ExperimentRow>& rows) {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (const auto& r : rows) {
    acc[r.m].first += r.bits_per_emission;
    acc[r.m].second += 1;
  }
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& [m, sum] : acc) out.emplace_back(m, sum.first / static_cast<double>(sum.second));
  return out;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "m,trial,bits,bits_per_emission,H,source_id,seed\n";
  const auto old = out.precision(10);
  for (const auto& r : rows) {
    out << r.m << ',' << r.trial << ',' << r.bits << ',' << r.bits_per_emission << ',' << r.entropy
        << ',' << r.source_id << ',' << r.seed << '\n';
  }
  out.precision(old);
}

// ---------------------------------------------------------------------------

DensityOperator::DensityOperator(const WordSource& src) {
  if (src.kind() != SourceKind::QuantumStates) {
    throw Error(ErrorKind::Domain, "density operators need a quantum source");
  }
  const auto dim = static_cast<Eigen::Index>(src.states().front().dimension());
  rho_ = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto a = src.states()[j].amplitudes();
    const Eigen::Map<const Eigen::VectorXcd> v(a.data(), dim);
    rho_ += src.probs()[j] * (v * v.adjoint());
  }
  validate();
}

DensityOperator::DensityOperator(Matrix rho) : rho_(std::move(rho)) { validate(); }

void DensityOperator::validate() const {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw Error(ErrorKind::Dimension, "density operator must be square");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::Domain, "density operator must be Hermitian");
  }
  if (std::abs(rho_.trace() - Complex{1.0, 0.0}) > 1e-10) {
    throw Error(ErrorKind::Domain, "density operator must have unit trace");
  }
  for (double l : eigenvalues()) {
    if (l < -1e-10) throw Error(ErrorKind::Domain, "density operator must be positive semidefinite");
  }
}

std::vector<double> DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (double l : rho.eigenvalues()) {
    if (l > 1e-15) s -= l * std::log2(l);
  }
  return std::max(0.0, s);
}

}  // namespace qcx
