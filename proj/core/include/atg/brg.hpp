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

#ifndef ATG_BRG_HPP
#define ATG_BRG_HPP

#include <cstdint>
#include <vector>

#include "atg/automaton.hpp"
#include "atg/mpg.hpp"
#include "atg/region.hpp"

namespace atg {

/// Integer boundary witness: the move waits until clock `clock` shows
/// the integer `bound`, i.e. for time max(0, bound - s(clock)).
struct BoundaryWitness {
    int bound = 0;
    ClockId clock = 0;
    bool operator==(const BoundaryWitness& o) const = default;
};

/// Window of delays t with s + t in the closure of a target region,
/// with integer witnesses for both ends. lo == hi iff the region is
/// thin (seen from a state of its past).
struct BoundaryWindow {
    Rational lo, hi;
    BoundaryWitness lo_witness, hi_witness;
};

/// Delay window into clos(target) from valuation s. `target` must
/// describe a region whose closure the time line through s meets;
/// otherwise errc::not_in_future.
BoundaryWindow boundary_times(const TimedGameAutomaton& automaton, const ClockValuation& s,
                              const ClockRegion& target);

/// One boundary move: wait to an end of the window into clos(via),
/// then fire `action` there.
struct BoundaryMove {
    Rational delay;
    BoundaryWitness witness;
    ClockRegion via;      // region whose closure the move fires in
    ActionId action = 0;
    Configuration target;       // after resets
    ClockRegion target_region;  // region of the target, tracked symbolically
};

/// All boundary moves from (s, region): for each region of the state
/// zone chain starting at `region` and each action enabled there, the
/// moves at the two window ends (one move when they coincide).
/// Deterministic order: chain position, then action id, then lo
/// before hi.
std::vector<BoundaryMove> boundary_moves(const TimedGameAutomaton& automaton,
                                         const Configuration& config, const ClockRegion& region);

struct BrgVertex {
    Configuration config;
    ClockRegion region;  // config.valuation lies in clos(region)
    Player owner = Player::Min;
};

struct BrgEdge {
    int src = 0;
    int dst = 0;
    Rational delay;
    BoundaryWitness witness;
    ClockRegion via;
    ActionId action = 0;
};

/// Finite game graph over (state, region) pairs reached from a start
/// state by boundary moves. Vertex 0 is the start; vertices appear in
/// breadth-first discovery order, edges grouped by source.
struct BoundaryRegionGraph {
    std::vector<BrgVertex> vertices;
    std::vector<BrgEdge> edges;
    std::vector<std::vector<int>> out;  // edge ids per vertex

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Breadth-first closure under boundary moves. Throws
/// errc::explosion_guard when more than `max_vertices` states appear,
/// errc::left_state_zone when `start` violates its state zone.
BoundaryRegionGraph explore(const TimedGameAutomaton& automaton, const Configuration& start,
                            std::uint64_t max_vertices);

/// The graph as a mean-payoff game: weights are delays times `scale`,
/// the least common denominator of all delays. Vertices and edges map
/// by index.
struct ScaledGame {
    MeanPayoffGame game;
    std::int64_t scale = 1;
};

ScaledGame to_mpg(const BoundaryRegionGraph& brg);

/// Integrality facts that hold exactly when the start is a corner
/// (all-integer) state.
struct CornerPointReport {
    bool corner_start = false;
    bool integral_delays = false;
    bool integral_valuations = false;
};

CornerPointReport corner_point_view(const BoundaryRegionGraph& brg);

}  // namespace atg

#endif  // ATG_BRG_HPP
