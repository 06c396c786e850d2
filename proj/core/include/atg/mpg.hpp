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

#ifndef ATG_MPG_HPP
#define ATG_MPG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "atg/error.hpp"
#include "atg/player.hpp"
#include "atg/rational.hpp"

namespace atg {

/// Finite mean-payoff game. Min minimizes, Max maximizes the limit
/// average edge weight. Every vertex must have at least one outgoing
/// edge; parallel edges and self-loops are allowed.
struct MpgEdge {
    int src = 0;
    int dst = 0;
    std::int64_t weight = 0;
};

class MeanPayoffGame {
public:
    MeanPayoffGame() = default;
    MeanPayoffGame(std::vector<Player> owners, std::vector<MpgEdge> edges);

    int num_vertices() const { return static_cast<int>(owners_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    Player owner(int v) const { return owners_[static_cast<std::size_t>(v)]; }
    const std::vector<Player>& owners() const { return owners_; }
    const MpgEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<MpgEdge>& edges() const { return edges_; }

    /// Edge indices leaving v, in insertion order.
    const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }

    /// Largest |weight|; 1 when that maximum is zero so it can serve as
    /// a denominator bound.
    std::int64_t weight_scale() const;

private:
    std::vector<Player> owners_;
    std::vector<MpgEdge> edges_;
    std::vector<std::vector<int>> out_;
};

/// Positional strategy: one chosen outgoing edge index per owned
/// vertex, -1 elsewhere.
using PositionalStrategy = std::vector<int>;

/// T steps of the finite-horizon recurrence
///   nu_0 = 0,  nu_t(v) = opt_{(v,w)} (weight + nu_{t-1}(w)),
/// opt = min for Min vertices and max for Max vertices. Returns nu_T.
/// Throws errc::overflow when T * weight_scale risks exceeding int64.
std::vector<std::int64_t> value_iteration(const MeanPayoffGame& game, std::int64_t steps);

/// Closest rational with denominator <= max_den (ties are an
/// errc::ambiguous_rounding error since they indicate the horizon was
/// too short for the claimed denominator bound).
Rational round_to_cycle_mean(const Rational& x, std::int64_t max_den);

/// Per-vertex optimal cycle mean in the one-player graph obtained by
/// fixing `fixed` for `fixed_player` (pass nullptr to leave the graph
/// as-is). objective = Max: best reachable maximum cycle mean;
/// objective = Min: minimum. Karp's recurrence per strongly connected
/// component, then dynamic programming over the condensation.
std::vector<Rational> karp_mean_cycle(const MeanPayoffGame& game, Player objective,
                                      const PositionalStrategy* fixed = nullptr,
                                      std::optional<Player> fixed_player = std::nullopt);

/// True iff `values` is certified exact by the strategy pair: fixing
/// min_strategy caps Max's best response at values, and fixing
/// max_strategy floors Min's best response at values.
bool verify(const MeanPayoffGame& game, const std::vector<Rational>& values,
            const PositionalStrategy& min_strategy, const PositionalStrategy& max_strategy);

struct SolveOptions {
    /// Alternating-reinitialization rounds of two-sided strategy
    /// improvement before falling back to the horizon bound.
    int improvement_rounds = 12;
    /// Fallback horizon cap: refuse value iteration when the estimated
    /// work T * edges exceeds this.
    std::int64_t horizon_work_limit = 4'000'000'000;
    /// Cap on lift operations in energy-based strategy synthesis.
    std::int64_t synthesis_lift_limit = 50'000'000;
};

struct SolveResult {
    std::vector<Rational> values;
    PositionalStrategy min_strategy;
    PositionalStrategy max_strategy;
    /// Always true on return; solve throws instead of returning an
    /// uncertified answer.
    bool verified = false;
    /// Improvement rounds actually used (0 when the first pair of
    /// one-sided fixpoints already agreed).
    int rounds = 0;
    bool used_value_iteration = false;
};

/// Exact values and positional optimal strategies for both players.
/// Two-sided strategy improvement with certified agreement; falls back
/// to value iteration at horizon 4 n^3 W plus rounding when the sides
/// keep disagreeing. Throws errc::solver_stalled if neither route
/// certifies.
SolveResult solve(const MeanPayoffGame& game, const SolveOptions& options = {});

/// Ground-truth values by enumerating every positional strategy pair
/// and taking min over Min strategies of max over Max strategies of
/// the resulting single-play cycle mean. Throws errc::too_large when
/// the pair count exceeds `limit`.
std::vector<Rational> brute_force_solve(const MeanPayoffGame& game,
                                        std::int64_t limit = 1'000'000);

}  // namespace atg

#endif  // ATG_MPG_HPP
