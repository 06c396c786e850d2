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

#ifndef ATG_PIPELINE_HPP
#define ATG_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "atg/brg.hpp"

namespace atg {

/// End-to-end result: the boundary graph, its mean-payoff reduction,
/// and exact per-vertex game values in time units per move.
struct SolvedGame {
    BoundaryRegionGraph brg;
    std::int64_t scale = 1;
    std::vector<Rational> values;
    PositionalStrategy min_strategy;  // boundary edge ids
    PositionalStrategy max_strategy;
    bool verified = false;

    /// Value of the start state.
    const Rational& value() const { return values.front(); }
};

SolvedGame solve_average_time(const TimedGameAutomaton& automaton, const Configuration& start,
                              std::uint64_t max_vertices, const SolveOptions& options = {});

/// Is the average-time value from `start` at most `threshold`?
bool decide(const TimedGameAutomaton& automaton, const Configuration& start,
            const Rational& threshold, std::uint64_t max_vertices);

/// What an optimal move does: wait until `witness.clock` shows
/// `witness.bound` (clamped at zero), landing in clos(via), then fire
/// `action`.
struct StrategyDecision {
    BoundaryWitness witness;
    ActionId action = 0;
    ClockRegion via;
    bool operator==(const StrategyDecision& o) const = default;
};

/// Positional strategy over boundary states, with a derived per-region
/// table: each region keeps the decision of its first discovered
/// vertex. Whether all vertices of a region agreed is reported, never
/// assumed.
struct BoundaryStrategy {
    Player player = Player::Min;
    std::map<std::pair<Configuration, ClockRegion>, StrategyDecision> by_vertex;
    std::map<Region, StrategyDecision> by_region;
    bool region_uniform = true;
    std::vector<Region> mixed_regions;
};

BoundaryStrategy extract_boundary_strategy(const TimedGameAutomaton& automaton,
                                           const SolvedGame& solved, Player player);

/// A player in a simulation: a boundary strategy, played exactly, or
/// eps-perturbed into the open delay window (thin targets stay exact).
struct SimPlayer {
    const BoundaryStrategy* strategy = nullptr;
    std::optional<Rational> epsilon;
};

inline SimPlayer pure(const BoundaryStrategy& s) { return {&s, std::nullopt}; }
inline SimPlayer epsilon_close(const BoundaryStrategy& s, const Rational& eps) {
    return {&s, eps};
}

struct SimStep {
    Configuration before;
    ClockRegion before_region;
    Rational delay;
    ActionId action = 0;
};

struct SimTrace {
    Configuration initial;
    ClockRegion initial_region;
    std::vector<SimStep> steps;
    std::vector<Rational> cumulative;  // total time after each step
    Configuration final_config;
    ClockRegion final_region;

    Rational total() const { return cumulative.empty() ? Rational(0) : cumulative.back(); }
    /// Average time per move over the first n steps.
    Rational average(int n) const;
};

/// Plays both strategies for `steps` moves from `start`. Delays and
/// guards follow the boundary semantics: moves may fire on the border
/// of their target region.
SimTrace simulate(const TimedGameAutomaton& automaton, const Configuration& start, int steps,
                  const SimPlayer& min_player, const SimPlayer& max_player);

/// m interior states of a region exercising different fraction
/// values; pairwise distinct whenever the region has a fractional
/// clock. Zero-fraction clocks stay integral.
std::vector<ClockValuation> sample_region(const ClockRegion& region, int m);

/// Game values of m sampled states of a region; all equal iff the
/// value is constant across the sample.
std::vector<Rational> regional_constancy_probe(const TimedGameAutomaton& automaton,
                                               const Region& region, int m,
                                               std::uint64_t max_vertices);

/// F(s) = offset, or offset - s(clock), with an integer offset.
struct SimpleTimeFunction {
    bool constant = true;
    std::int64_t offset = 0;
    ClockId clock = 0;
    Rational eval(const ClockValuation& s) const {
        return constant ? Rational(offset) : Rational(offset) - s[clock];
    }
};

struct SimpleFitReport {
    bool fits = false;
    SimpleTimeFunction fn;
    std::vector<std::pair<ClockValuation, Rational>> samples;  // state, n-step total time
    bool strategies_region_uniform = true;
};

/// Fits the n-step total time of the pure strategy play, sampled at m
/// states of `region`, to a simple time function.
SimpleFitReport simple_time_probe(const TimedGameAutomaton& automaton,
                                  const BoundaryStrategy& min_strategy,
                                  const BoundaryStrategy& max_strategy, const Region& region,
                                  int steps, int m);

/// Additive transient bound T0 for the optimal pure play from the
/// start: total time of the first n moves never exceeds n * value +
/// T0, for every n.
Rational transient_bound(const TimedGameAutomaton& automaton, const SolvedGame& solved);

}  // namespace atg

#endif  // ATG_PIPELINE_HPP
