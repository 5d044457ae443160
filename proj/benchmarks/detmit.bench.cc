// Copyright 2026 The detmit Authors
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

#include "detmit/collective.h"
#include "detmit/detector_model.h"
#include "detmit/reconstruct.h"
#include "detmit/graph.h"
#include "detmit/statesim.h"

using namespace detmit;

namespace {

std::vector<double> random_vector(std::size_t size) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> v(size);
    for (double &x : v) {
        x = u(rng);
    }
    return v;
}

void BM_apply_m_inverse(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    DetectorModel m = DetectorModel::uniform(n, 0.03, 0.05);
    std::vector<double> f = random_vector(outcome_count(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_m_inverse(m, f));
    }
}
BENCHMARK(BM_apply_m_inverse)->DenseRange(4, 20, 4);

void BM_correct(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    DetectorModel m = DetectorModel::uniform(n, 0.03, 0.03);
    Distribution f;
    f.values = random_vector(outcome_count(n));
    f.sigmas.assign(f.values.size(), 0);
    f.shots = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(correct(f, m));
    }
}
BENCHMARK(BM_correct)->DenseRange(4, 16, 4);

void BM_build_inverse_response(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_inverse_response(n, 0.02, 0.03));
    }
}
BENCHMARK(BM_build_inverse_response)->RangeMultiplier(4)->Range(8, 512);

void BM_sample_setting(benchmark::State &state) {
    GraphSpec g = build_graph(GraphKind::kGhz, 10);
    DetectorModel m = DetectorModel::uniform(10, 0.03, 0.03);
    std::string setting = color_class_setting(g, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_setting(g, NoiseSpec{0.02}, setting, m, 5000, seed++, 0));
    }
}
BENCHMARK(BM_sample_setting);

}  // namespace
BENCHMARK_MAIN();
