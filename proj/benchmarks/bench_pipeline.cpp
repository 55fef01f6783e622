// SPDX-License-Identifier: Apache-2.0
//
// pchbf: partially-connected hybrid beamforming link-level simulator
// Copyright (C) 2026 The pchbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pchbf/clustering.hpp>
#include <pchbf/config.hpp>
#include <pchbf/link_simulator.hpp>

#include <benchmark/benchmark.h>

using namespace pchbf;

namespace
{

const Scenario &desk()
{
    static const Scenario s = make_scenario(desk_preset());
    return s;
}

ChannelMatrix desk_drop(std::uint64_t seed)
{
    Rng rng(seed);
    return generate_drop(desk().geometry, desk().drop, rng);
}

} // namespace

static void BM_GenerateDrop(benchmark::State &state)
{
    Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_drop(desk().geometry, desk().drop, rng));
}
BENCHMARK(BM_GenerateDrop);

static void BM_HierarchicalSectorization(benchmark::State &state)
{
    const auto h = desk_drop(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hierarchical_sectorization(h.entries(), 3, MetricKind::per_subarray, h.geometry()));
}
BENCHMARK(BM_HierarchicalSectorization);

static void BM_HierarchicalCluster(benchmark::State &state)
{
    const auto n = state.range(0);
    Rng rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DistanceMatrix d;
    d.values = RMat::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            d.values(i, j) = d.values(j, i) = u(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(hierarchical_cluster(d, 8));
}
BENCHMARK(BM_HierarchicalCluster)->Arg(12)->Arg(60)->Arg(240);

static void BM_SectorPlan(benchmark::State &state)
{
    const auto algorithm = all_algorithms()[static_cast<std::size_t>(state.range(0))];
    const auto h = desk_drop(4);
    state.SetLabel(std::string(to_string(algorithm)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_sector_plan(h, algorithm, 3, 4));
}
BENCHMARK(BM_SectorPlan)->DenseRange(0, 5);

static void BM_Trial(benchmark::State &state)
{
    const auto algorithm = all_algorithms()[static_cast<std::size_t>(state.range(0))];
    const auto h = desk_drop(5);
    const auto plan = build_sector_plan(h, algorithm, 3, 4);
    Rng rng(6);
    const auto real = draw_realization(h.n_rx(), h.n_tx(), 48, 3, rng);
    const Qam16 q;
    state.SetLabel(std::string(to_string(algorithm)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_trial(h, plan, 15.0, q, real));
}
BENCHMARK(BM_Trial)->DenseRange(0, 5);

static void BM_DeskSweep(benchmark::State &state)
{
    SweepSettings s = make_sweep_settings(desk_preset());
    s.n_drops = state.range(0);
    s.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo(desk(), s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DeskSweep)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
