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


// Shared builders for test inputs (not oracles).
#pragma once

#include <algorithm>
#include <random>

#include "qcx/circuit.hpp"

namespace qcx::fixture {

inline Circuit random_circuit(const BasisPtr& basis, int n, std::size_t gates, std::mt19937_64& rng) {
  Circuit c(basis, n);
  std::vector<const Gate*> usable;
  for (const auto& g : basis->gates()) {
    if (g.arity <= n) usable.push_back(&g);
  }
  for (std::size_t i = 0; i < gates; ++i) {
    const Gate& g = *usable[rng() % usable.size()];
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < g.arity) {
      const int q = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (std::find(targets.begin(), targets.end(), q) == targets.end()) targets.push_back(q);
    }
    c.append(g.name, std::move(targets));
  }
  return c;
}

// A short ladder repeated: H on every qubit then CNOTs down the register.
inline Circuit periodic_circuit(int n, std::size_t gates) {
  Circuit c(standard_basis(), n);
  std::size_t k = 0;
  while (c.size() < gates) {
    const int q = static_cast<int>(k % static_cast<std::size_t>(n));
    if (k / static_cast<std::size_t>(n) % 2 == 0 || n == 1) {
      c.append("H", {q});
    } else {
      c.append("CNOT", {q, (q + 1) % n});
    }
    ++k;
  }
  return c;
}

}  // namespace qcx::fixture
