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


#include <benchmark/benchmark.h>

#include <random>

#include "qcx/bounds.hpp"
#include "qcx/detail/random_su2.hpp"
#include "qcx/encode.hpp"
#include "qcx/sk.hpp"

namespace qcx {
namespace {

void BM_ApplyGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = standard_basis();
  const UnitaryMatrix& cnot = basis->at("CNOT").matrix;
  StateVector psi = zero_state(n);
  const std::vector<int> targets{0, n - 1};
  for (auto _ : state) {
    psi = apply_gate(psi, cnot, targets);
    benchmark::DoNotOptimize(psi);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyGate)->DenseRange(4, 20, 4);

void BM_NetBuild(benchmark::State& state) {
  const auto basis = standard_basis();
  for (auto _ : state) {
    auto net = SkNet::build(*basis, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(net);
  }
}
BENCHMARK(BM_NetBuild)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SkApproximate(benchmark::State& state) {
  const auto net = shared_net(*standard_basis(), 16);
  std::mt19937_64 rng(7);
  const Mat2 target = random_su2(rng);
  for (auto _ : state) {
    auto r = sk_approximate(target, *net, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SkApproximate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CompressedBound(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::string x;
  for (std::int64_t i = 0; i < state.range(0); ++i) x += (rng() & 1) ? '1' : '0';
  const EncodedString s = embed_classical(x).second;
  for (auto _ : state) {
    auto e = compressed_bound(s);
    benchmark::DoNotOptimize(e);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(pack_bits(s).size()));
}
BENCHMARK(BM_CompressedBound)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
}  // namespace qcx

BENCHMARK_MAIN();
