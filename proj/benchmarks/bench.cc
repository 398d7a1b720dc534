// Copyright 2026 The condham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "condham/conditional.h"
#include "condham/phase_estimation.h"
#include "condham/pulse.h"

namespace {

using namespace condham;

void BM_HermitianEig(benchmark::State &state) {
    auto h = to_dense(random_hamiltonian(static_cast<size_t>(state.range(0)), 1, 1.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(h));
    }
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 7);

void BM_SimulateSelect(benchmark::State &state) {
    size_t n = static_cast<size_t>(state.range(0));
    auto h = random_hamiltonian(n, 2, 1.0);
    auto select = nest(isolate_pair_schedule(n, 0, 1, PauliAxis::X, PauliAxis::Z, 0.05),
                       rescale_schedule(n, 0, 1, PauliAxis::X, PauliAxis::Z, 0.05));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_schedule(select, h, 4));
    }
}
BENCHMARK(BM_SimulateSelect)->DenseRange(2, 5);

void BM_PulseConditionalStep(benchmark::State &state) {
    auto h = random_hamiltonian(3, 3, 1.0);
    ConversionParams p;
    p.mode = EvolutionMode::PulseLevel;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pair_conditional_step(h, 0, 2, PauliAxis::Y, PauliAxis::X, p));
    }
}
BENCHMARK(BM_PulseConditionalStep);

void BM_RunQpeMixed(benchmark::State &state) {
    auto h = random_hamiltonian(static_cast<size_t>(state.range(0)), 4, 1.0);
    auto cfg = PEConfig::from_delta(static_cast<int>(state.range(1)), spread_bound(h));
    auto rho = DensityMatrix::maximally_mixed(size_t{1} << h.num_qubits());
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_qpe(h, rho, cfg));
    }
}
BENCHMARK(BM_RunQpeMixed)->Args({3, 6})->Args({4, 6})->Args({4, 8})->Args({6, 6});

}  // namespace

BENCHMARK_MAIN();
