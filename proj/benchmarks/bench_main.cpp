// SPDX-License-Identifier: Apache-2.0
//
// nfsteer: near-field beam steering for planar antenna arrays
// Copyright (C) 2026 The nfsteer authors
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

#include "nfsteer/field.hpp"
#include "nfsteer/solver.hpp"
#include "nfsteer/synthesis.hpp"

#include <benchmark/benchmark.h>

using namespace nfsteer;

static void BM_SolveFootCone(benchmark::State &state)
{
    const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(20, 10));
    const Vec3 p{0.031, 0.0, -0.017};
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_foot(w, p));
}
BENCHMARK(BM_SolveFootCone);

static void BM_SynthesizeCone(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const ArrayGeometry array = ArrayGeometry::from_frequency(n, n, 0.5, 100e9);
    const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(20, 10));
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize(array, w));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(array.size()));
}
BENCHMARK(BM_SynthesizeCone)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_OracleMinDistance(benchmark::State &state)
{
    const SteeredWavefront w(Wavefront::cone(0.2), SteeringAngles::from_degrees(20, 10));
    SolverConfig cfg;
    cfg.oracle_grid = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_min_distance(w, {0.031, 0.0, -0.017}, cfg));
}
BENCHMARK(BM_OracleMinDistance)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

static void BM_TotalField(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const ArrayGeometry array = ArrayGeometry::from_frequency(n, n, 0.5, 100e9);
    const Excitation exc = to_excitation(synthesize(array, SteeredWavefront(Wavefront::cone(0.2))));
    const ObservationGrid grid = ObservationGrid::planar(ObservationGrid::Plane::YZ, 0.0, 0.05, 0.55, 40, -0.1, 0.1, 40);
    for (auto _ : state)
        benchmark::DoNotOptimize(total_field(array, exc, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(array.size() * grid.size()));
}
BENCHMARK(BM_TotalField)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
