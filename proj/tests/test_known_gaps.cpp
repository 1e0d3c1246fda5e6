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


// Properties that the construction targets but that do not hold with a
// DEFLATE proxy and finite constants. Each test is registered with ctest as
// an expected failure; a pass here means the gap closed and the registration
// should move back to the regular suites.

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qcx/bounds.hpp"
#include "qcx/cli/cli.hpp"
#include "qcx/sources.hpp"

namespace qcx {
namespace {

std::vector<double> random_distribution(std::size_t k, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(k);
  for (auto& x : p) x = e(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= s;
  return p;
}

// min over candidates <= general(N, eps) + compressor header.
TEST(KnownGap, EstimateWithinGeneralBound) {
  std::mt19937_64 rng(51);
  const auto gens = default_generators(standard_basis());
  const double header = static_cast<double>(header_constant_bits());
  for (int n = 1; n <= 4; ++n) {
    for (double eps : {0.1, 0.01}) {
      for (int trial = 0; trial < 2; ++trial) {
        const double bits = min_over_candidates(oracle::random_state(n, rng), eps, gens).estimate.bits;
        EXPECT_LE(bits, general_bound(n, eps) + header) << "n=" << n << " eps=" << eps;
      }
    }
  }
}

// Dictionary part of a quantum message <= -#D N^2 2^N log eps.
TEST(KnownGap, QuantumDictionaryWithinCap) {
  std::mt19937_64 rng(52);
  for (int n : {1, 2}) {
    for (std::size_t k : {1u, 2u, 3u}) {
      std::vector<StateVector> states;
      for (std::size_t j = 0; j < k; ++j) states.push_back(oracle::random_state(n, rng));
      const WordSource src = WordSource::states(states, random_distribution(k, rng));
      const auto e = quantum_message_estimate(src, sample_sentence(src, 100, 1), 0.1, standard_basis());
      EXPECT_LE(e.dictionary_bits, e.cap) << "n=" << n << " #D=" << k;
    }
  }
}

// Two one-qubit states at eps = 0.1: dictionary <= 2 general(1, 0.1) + one header per state.
TEST(KnownGap, TwoQubitDictionaryNearTwiceGeneral) {
  std::mt19937_64 rng(53);
  const double header = static_cast<double>(header_constant_bits());
  for (int trial = 0; trial < 5; ++trial) {
    const WordSource src =
        WordSource::states({oracle::random_state(1, rng), oracle::random_state(1, rng)}, {0.5, 0.5});
    const auto e = quantum_message_estimate(src, sample_sentence(src, 100, 1), 0.1, standard_basis());
    EXPECT_LE(e.dictionary_bits, 2 * general_bound(1, 0.1) + 2 * header);
  }
}

// Compressing the concatenated words directly <= index part + dictionary part + header.
TEST(KnownGap, DirectSentenceWithinTwoPart) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 2 + rng() % 6;
    const int l = 4 + static_cast<int>(rng() % 12);
    std::vector<std::string> words;
    while (words.size() < k) {
      std::string s;
      for (int i = 0; i < l; ++i) s += (rng() & 1) ? '1' : '0';
      if (std::find(words.begin(), words.end(), s) == words.end()) words.push_back(s);
    }
    const WordSource src = WordSource::words(words, random_distribution(k, rng));
    const auto idx = sample_sentence(src, 200 + rng() % 2000, rng());
    const SentenceEstimate two = sentence_estimate(idx, src);
    const double direct = static_cast<double>(compressed_bits(pack_sentence(src, idx)));
    EXPECT_LE(direct, two.total + static_cast<double>(two.header_bits)) << t;
  }
}

// CLI: a random 3-qubit state at eps = 0.01 stays within general(3, 0.01) + header.
TEST(KnownGap, CliRandomThreeQubitWithinGeneral) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::run({"estimate", "random:3:1", "--generators", "generic"}, out, err), 0) << err.str();
  const std::string text = out.str();
  const auto at = text.find("min_over_candidates,");
  ASSERT_NE(at, std::string::npos);
  const double bits = std::stod(text.substr(at + 20));
  EXPECT_LE(bits, general_bound(3, 0.01) + static_cast<double>(header_constant_bits()));
}

}  // namespace
}  // namespace qcx
