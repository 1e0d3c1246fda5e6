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


#include <cmath>
#include <unordered_set>

#include "qcx/bounds.hpp"

namespace qcx {

double incompressible_fraction(int n, double c) {
  if (n < 1) throw Error(ErrorKind::Domain, "string length must be >= 1");
  if (!(c > 0.0)) throw Error(ErrorKind::Domain, "threshold must be positive");
  return (std::exp2(c) - 1.0) / std::exp2(n);
}

NoncomplexFraction noncomplex_fraction(int n, double epsilon, double c) {
  if (n < 1 || n > 62) throw Error(ErrorKind::Domain, "qubit count out of range");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::Domain, "precision must lie in (0, 1)");
  const double exponent =
      static_cast<double>(n) * n * std::ldexp(1.0, n) * std::log2(epsilon) + c;
  const double value = std::exp2(exponent);
  return {value, std::min(value, 1.0)};
}

namespace {

constexpr std::uint64_t kToyOutputCap = std::uint64_t{1} << 26;

class BitReader {
 public:
  explicit BitReader(std::string_view bits) : bits_(bits) {}
  bool done() const { return pos_ == bits_.size(); }
  std::optional<bool> bit() {
    if (pos_ == bits_.size()) return std::nullopt;
    const char ch = bits_[pos_++];
    if (ch != '0' && ch != '1') return std::nullopt;
    return ch == '1';
  }
  /// Elias gamma: z zeros, then a 1 and z more bits.
  std::optional<std::uint64_t> gamma() {
    int zeros = 0;
    while (true) {
      auto b = bit();
      if (!b) return std::nullopt;
      if (*b) break;
      if (++zeros > 40) return std::nullopt;
    }
    std::uint64_t v = 1;
    for (int i = 0; i < zeros; ++i) {
      auto b = bit();
      if (!b) return std::nullopt;
      v = 2 * v + *b;
    }
    return v;
  }
  std::optional<std::string_view> take(std::uint64_t k) {
    if (k > bits_.size() - pos_) return std::nullopt;
    auto out = bits_.substr(pos_, k);
    pos_ += k;
    return out;
  }

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<std::string> run_toy_machine(std::string_view description) {
  if (description.empty()) return std::nullopt;
  BitReader in(description);
  std::string out;
  while (!in.done()) {
    const auto op = in.bit();
    if (!op) return std::nullopt;
    const auto k = in.gamma();
    if (!k) return std::nullopt;
    std::uint64_t r = 1;
    if (*op) {
      const auto rr = in.gamma();
      if (!rr) return std::nullopt;
      r = *rr;
    }
    const auto payload = in.take(*k);
    if (!payload) return std::nullopt;
    if (*k > 0 && r > kToyOutputCap / *k) {
      throw Error(ErrorKind::Domain, "toy machine output exceeds the size cap");
    }
    for (std::uint64_t i = 0; i < r; ++i) out += *payload;
  }
  return out;
}

CensusResult toy_machine_census(int c) {
  if (c < 0 || c > kCensusCap) {
    throw Error(ErrorKind::Domain, "census length must lie in [0, " + std::to_string(kCensusCap) + "]");
  }
  CensusResult r;
  r.c = c;
  r.bound = (std::uint64_t{1} << c) - 1;
  std::unordered_set<std::string> outputs;
  std::string desc;
  for (int len = 0; len < c; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      desc.assign(static_cast<std::size_t>(len), '0');
      for (int b = 0; b < len; ++b) {
        if (v >> (len - 1 - b) & 1u) desc[static_cast<std::size_t>(b)] = '1';
      }
      ++r.descriptions;
      if (auto out = run_toy_machine(desc)) {
        ++r.valid;
        outputs.insert(std::move(*out));
      }
    }
  }
  r.distinct_outputs = outputs.size();
  r.holds = r.distinct_outputs <= r.bound;
  return r;
}

VitanyiBound vitanyi_bound(const StateVector& phi) {
  VitanyiBound v;
  const auto amps = phi.amplitudes();
  for (std::size_t j = 0; j < amps.size(); ++j) {
    const double p = std::norm(amps[j]);
    if (p > v.probability) {
      v.probability = p;
      v.index = j;
    }
  }
  const int n = phi.num_qubits();
  v.description_bits = n;
  // The slack keeps exact powers of two (p = 1/4) from rounding up.
  v.penalty_bits = std::max(0, static_cast<int>(std::ceil(-std::log2(v.probability) - 1e-12)));
  v.total_bits = v.description_bits + v.penalty_bits;
  v.epsilon_vit = 1.0 - std::ldexp(1.0, -n);
  return v;
}

}  // namespace qcx
