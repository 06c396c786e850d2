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

#include "atg/generate.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace atg {

std::uint64_t Prng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Prng::below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

std::int64_t Prng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

MeanPayoffGame random_mpg(std::uint64_t seed) {
    Prng rng(seed);
    const int n = static_cast<int>(rng.range(2, 6));
    std::vector<Player> owners;
    for (int v = 0; v < n; ++v) owners.push_back(rng.flip() ? Player::Max : Player::Min);
    std::vector<MpgEdge> edges;
    for (int v = 0; v < n; ++v)
        edges.push_back({v, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                         rng.range(0, 8)});
    const int extra = static_cast<int>(rng.range(0, 12 - n));
    for (int e = 0; e < extra; ++e)
        edges.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                         static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                         rng.range(0, 8)});
    return MeanPayoffGame(std::move(owners), std::move(edges));
}

TimedGameAutomaton random_automaton(std::uint64_t seed) {
    Prng rng(seed);
    const int num_clocks = static_cast<int>(rng.range(1, 2));
    const int bound = static_cast<int>(rng.range(1, 2));
    const int num_locations = static_cast<int>(rng.range(2, 4));

    std::vector<std::string> clocks;
    for (int c = 0; c < num_clocks; ++c) clocks.push_back("x" + std::to_string(c));
    std::vector<std::string> locations;
    std::vector<Player> owners;
    std::vector<Zone> state_zones;
    for (int l = 0; l < num_locations; ++l) {
        locations.push_back("l" + std::to_string(l));
        owners.push_back(rng.flip() ? Player::Max : Player::Min);
        state_zones.push_back(Zone::always());
    }

    std::vector<ActionDef> actions;
    {
        // Always enabled everywhere with at least one reset, so every
        // region keeps a legal move and the bound is never a trap.
        ActionDef base;
        base.name = "a0";
        base.resets.assign(clocks.size(), false);
        base.resets[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(num_clocks)))] =
            true;
        for (int c = 0; c < num_clocks; ++c)
            if (!base.resets[static_cast<std::size_t>(c)] && rng.flip())
                base.resets[static_cast<std::size_t>(c)] = true;
        base.enabled.assign(locations.size(), Zone::always());
        base.target.assign(locations.size(), -1);
        for (int l = 0; l < num_locations; ++l)
            base.target[static_cast<std::size_t>(l)] =
                static_cast<int>(rng.below(static_cast<std::uint64_t>(num_locations)));
        actions.push_back(std::move(base));
    }
    const int extras = static_cast<int>(rng.range(1, 3));
    for (int e = 0; e < extras; ++e) {
        ActionDef def;
        def.name = "a" + std::to_string(e + 1);
        def.resets.assign(clocks.size(), false);
        for (int c = 0; c < num_clocks; ++c)
            if (rng.flip()) def.resets[static_cast<std::size_t>(c)] = true;
        def.enabled.assign(locations.size(), Zone::none());
        def.target.assign(locations.size(), -1);
        for (int l = 0; l < num_locations; ++l) {
            if (rng.below(3) == 0) continue;  // not available here
            SimpleConstraint guard;
            guard.clock = static_cast<ClockId>(rng.below(static_cast<std::uint64_t>(num_clocks)));
            const std::uint64_t kind = rng.below(3);
            guard.op = kind == 0 ? RelOp::LE : (kind == 1 ? RelOp::GE : RelOp::EQ);
            guard.bound = static_cast<int>(rng.range(0, bound));
            Zone zone;
            zone.conjuncts.push_back(guard);
            def.enabled[static_cast<std::size_t>(l)] = std::move(zone);
            def.target[static_cast<std::size_t>(l)] =
                static_cast<int>(rng.below(static_cast<std::uint64_t>(num_locations)));
        }
        actions.push_back(std::move(def));
    }

    ClockValuation zero;
    zero.values.assign(clocks.size(), Rational(0));
    return TimedGameAutomaton(std::move(clocks), bound, std::move(locations), std::move(owners),
                              std::move(state_zones), std::move(actions),
                              Configuration{0, std::move(zero)});
}

CountdownGame random_countdown(std::uint64_t seed) {
    Prng rng(seed);
    CountdownGame game;
    const int n = static_cast<int>(rng.range(2, 4));
    for (int v = 0; v < n; ++v) game.nodes.push_back("n" + std::to_string(v));
    for (int v = 0; v < n; ++v) {
        const int out = static_cast<int>(rng.range(1, 2));
        for (int e = 0; e < out; ++e) {
            CountdownMove move{v, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                               rng.range(1, 4)};
            const bool dup = std::any_of(game.moves.begin(), game.moves.end(),
                                         [&](const CountdownMove& m) {
                                             return m.from == move.from && m.to == move.to &&
                                                    m.duration == move.duration;
                                         });
            if (!dup) game.moves.push_back(move);
        }
    }
    game.initial_node = 0;
    game.budget = rng.range(1, 6);
    game.validate();
    return game;
}

}  // namespace atg
