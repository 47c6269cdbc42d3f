/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The mnnoma Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "mnnoma/channel.hpp"
#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/random.hpp"
#include "mnnoma/rate_analysis.hpp"
#include "mnnoma/sim_chain.hpp"

namespace {

using namespace mnnoma;

constexpr double kFs = 15.36e6;

struct Fixture {
    NumerologyPair pair;
    ChannelRealization h1;
    ChannelRealization h2;
};

// user 2 runs at mu1 + log2(q)
Fixture make_fixture(int mu1, int q_log2) {
    Rng rng = make_stream(11, 0, Stream::ChannelUser1);
    Fixture f{make_pair(numerology_from_index(mu1), numerology_from_index(mu1 + q_log2)), {}, {}};
    f.h1 = draw_realization(epa_profile(), kFs, rng);
    f.h2 = draw_realization(epa_profile(), kFs, rng);
    return f;
}

void BM_IniOrdering1(benchmark::State& state) {
    const Fixture f = make_fixture(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ChannelMatrix h2 = toeplitz_matrix(f.h2, f.pair.frame_length());
    for (auto _ : state) {
        benchmark::DoNotOptimize(ini_ordering1(h2, f.pair));
    }
}
BENCHMARK(BM_IniOrdering1)->Args({4, 0})->Args({4, 1})->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_IniOrdering2All(benchmark::State& state) {
    const Fixture f = make_fixture(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ChannelMatrix h1 = toeplitz_matrix(f.h1, f.pair.frame_length());
    for (auto _ : state) {
        benchmark::DoNotOptimize(ini_ordering2_all(h1, f.pair));
    }
}
BENCHMARK(BM_IniOrdering2All)->Args({4, 0})->Args({4, 1})->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_AnalyzeLink(benchmark::State& state) {
    const Fixture f = make_fixture(4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_link(f.h1, f.h2, f.pair));
    }
}
BENCHMARK(BM_AnalyzeLink)->Unit(benchmark::kMillisecond);

void BM_FrameSynthesis(benchmark::State& state) {
    const Fixture f = make_fixture(4, 1);
    const SimChain chain(f.pair, f.h1, f.h2);
    const PowerSplit split = PowerSplit::from_fraction(0.4, 1.0);
    Rng d1 = make_stream(3, 0, Stream::DataUser1);
    Rng d2 = make_stream(3, 0, Stream::DataUser2);
    Rng noise = make_stream(3, 0, Stream::Noise);
    for (auto _ : state) {
        const FrameSymbols frame = draw_frame_symbols(f.pair, d1, d2);
        benchmark::DoNotOptimize(chain.synthesize_frame(frame, split, 1e-3, noise));
    }
}
BENCHMARK(BM_FrameSynthesis)->Unit(benchmark::kMicrosecond);

void BM_PowerSearch(benchmark::State& state) {
    const Fixture f = make_fixture(4, 1);
    const LinkState link = analyze_link(f.h1, f.h2, f.pair);
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_power_search(link, Ordering::User2First, 0.1, 1.0, step));
    }
}
BENCHMARK(BM_PowerSearch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
