/*
 * Copyright 2026 The atg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
 * implied. See the License for the specific language governing
 * permissions and limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "atg/brg.hpp"
#include "atg/generate.hpp"
#include "atg/mpg.hpp"
#include "atg/pipeline.hpp"

namespace {

using namespace atg;

/// The two-location handoff game: one clock, bound 2, both players.
TimedGameAutomaton handoff() {
    ActionDef a;
    a.name = "a";
    a.resets = {true};
    a.enabled = {Zone{false, {{0, -1, RelOp::LE, 1}}}, Zone::none()};
    a.target = {1, -1};
    ActionDef b;
    b.name = "b";
    b.resets = {true};
    b.enabled = {Zone::none(), Zone{false, {{0, -1, RelOp::LE, 2}}}};
    b.target = {-1, 0};
    return TimedGameAutomaton({"c"}, 2, {"lmin", "lmax"}, {Player::Min, Player::Max},
                              {Zone{false, {{0, -1, RelOp::LE, 1}}},
                               Zone{false, {{0, -1, RelOp::LE, 2}}}},
                              {a, b}, Configuration{0, ClockValuation({Rational(0)})});
}

void BM_explore_handoff(benchmark::State& state) {
    const TimedGameAutomaton a = handoff();
    const Configuration start{0, ClockValuation({Rational(0)})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(explore(a, start, 100'000));
    }
}
BENCHMARK(BM_explore_handoff);

void BM_solve_pipeline_handoff(benchmark::State& state) {
    const TimedGameAutomaton a = handoff();
    const Configuration start{0, ClockValuation({Rational(0)})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_average_time(a, start, 100'000));
    }
}
BENCHMARK(BM_solve_pipeline_handoff);

void BM_solve_random_mpg(benchmark::State& state) {
    std::vector<MeanPayoffGame> games;
    for (std::uint64_t seed = 1; seed <= 64; ++seed) games.push_back(random_mpg(seed));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(games[i]));
        i = (i + 1) % games.size();
    }
}
BENCHMARK(BM_solve_random_mpg);

void BM_karp_mean_cycle(benchmark::State& state) {
    const MeanPayoffGame g = random_mpg(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(karp_mean_cycle(g, Player::Max));
    }
}
BENCHMARK(BM_karp_mean_cycle)->Arg(3)->Arg(17);

void BM_simulate_eps(benchmark::State& state) {
    const TimedGameAutomaton a = handoff();
    const Configuration start{0, ClockValuation({Rational(0)})};
    const SolvedGame solved = solve_average_time(a, start, 100'000);
    const BoundaryStrategy min_s = extract_boundary_strategy(a, solved, Player::Min);
    const BoundaryStrategy max_s = extract_boundary_strategy(a, solved, Player::Max);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate(a, start, 1000, epsilon_close(min_s, Rational(1, 100)), pure(max_s)));
    }
}
BENCHMARK(BM_simulate_eps);

}  // namespace

BENCHMARK_MAIN();
