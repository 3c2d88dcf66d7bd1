// Copyright 2026 The eprsim Authors.
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

#include "eprsim/experiment.hpp"
#include "eprsim/oracle.hpp"
#include "eprsim/povm.hpp"
#include "eprsim/protocol.hpp"
#include "eprsim/stats.hpp"

namespace {

using namespace eprsim;

void BM_SampleUnitVector(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_unit_vector(rng));
    }
}
BENCHMARK(BM_SampleUnitVector);

void BM_SampleOutcomeSic(benchmark::State& state) {
    const Povm sic = Povm::sic_tetrahedron();
    Rng rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_outcome(sic, rng));
    }
}
BENCHMARK(BM_SampleOutcomeSic);

void BM_RunProtocol(benchmark::State& state) {
    Rng setup(3);
    const int n = static_cast<int>(state.range(0));
    const Povm a = n == 0 ? Povm::sic_tetrahedron() : Povm::random(n, setup);
    const Povm b = n == 0 ? Povm::sic_tetrahedron() : Povm::random(n, setup);
    Rng rng(4);
    std::uint64_t rounds = 0;
    for (auto _ : state) {
        const Transcript t = run_protocol(a, b, rng);
        rounds += t.rounds;
        benchmark::DoNotOptimize(t);
    }
    state.counters["rounds/run"] =
        benchmark::Counter(static_cast<double>(rounds) / state.iterations());
}
BENCHMARK(BM_RunProtocol)->Arg(0)->Arg(2)->Arg(8)->Arg(32);

void BM_OracleJoint(benchmark::State& state) {
    Rng setup(5);
    const Povm a = Povm::random(static_cast<int>(state.range(0)), setup);
    const Povm b = Povm::random(static_cast<int>(state.range(0)), setup);
    for (auto _ : state) {
        benchmark::DoNotOptimize(joint(a, b));
    }
}
BENCHMARK(BM_OracleJoint)->Arg(4)->Arg(16);

void BM_ChiSquarePvalue(benchmark::State& state) {
    const Povm sic = Povm::sic_tetrahedron();
    const JointDistribution expected = joint(sic, sic);
    const TranscriptAccumulator acc =
        run_batch(sic, sic, 100000, 6, kDomainProtocolRun, kDefaultMaxRounds, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_square_pvalue(acc.counts, expected));
    }
}
BENCHMARK(BM_ChiSquarePvalue);

void BM_DprimeEntropy(benchmark::State& state) {
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dprime_conditional_entropy(1000, rng));
    }
}
BENCHMARK(BM_DprimeEntropy)->Unit(benchmark::kMicrosecond);

void BM_RunBatchParallel(benchmark::State& state) {
    const Povm sic = Povm::sic_tetrahedron();
    const int parallelism = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_batch(sic, sic, 100000, 8, kDomainProtocolRun, kDefaultMaxRounds, parallelism));
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_RunBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
