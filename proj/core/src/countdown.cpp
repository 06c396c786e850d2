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
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "atg/countdown.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "atg/pipeline.hpp"

namespace atg {

namespace {

// Keeps every derived timed-automaton constant comfortably inside int.
constexpr std::int64_t kMaxConstant = 100'000;

}  // namespace

void CountdownGame::validate() const {
    if (nodes.empty()) throw Error(errc::invalid_game, "countdown game has no nodes");
    std::set<std::string> names;
    for (const std::string& n : nodes) {
        if (n.empty() || n == "*")
            throw Error(errc::invalid_game, "node names must be nonempty and not '*'");
        if (!names.insert(n).second)
            throw Error(errc::invalid_game, "duplicate node name '" + n + "'");
    }
    if (initial_node < 0 || initial_node >= static_cast<int>(nodes.size()))
        throw Error(errc::invalid_game, "initial node out of range");
    if (budget < 0 || budget > kMaxConstant)
        throw Error(errc::invalid_game, "budget must lie in [0, 100000]");
    std::set<std::tuple<int, int, std::int64_t>> seen;
    for (const CountdownMove& m : moves) {
        if (m.from < 0 || m.from >= static_cast<int>(nodes.size()) || m.to < 0 ||
            m.to >= static_cast<int>(nodes.size()))
            throw Error(errc::invalid_game, "move endpoint out of range");
        if (m.duration < 1 || m.duration > kMaxConstant)
            throw Error(errc::invalid_game, "move duration must lie in [1, 100000]");
        if (!seen.insert({m.from, m.to, m.duration}).second)
            throw Error(errc::invalid_game, "duplicate move");
    }
}

CountdownSolution dp_solve(const CountdownGame& game) {
    game.validate();
    const int n = static_cast<int>(game.nodes.size());
    const std::int64_t budget = game.budget;

    // duration -> targets, per node
    std::vector<std::map<std::int64_t, std::vector<int>>> succ(static_cast<std::size_t>(n));
    for (const CountdownMove& m : game.moves)
        succ[static_cast<std::size_t>(m.from)][m.duration].push_back(m.to);

    CountdownSolution sol;
    sol.win.assign(static_cast<std::size_t>(n),
                   std::vector<bool>(static_cast<std::size_t>(budget + 1), false));
    for (int v = 0; v < n; ++v) sol.win[static_cast<std::size_t>(v)][0] = true;
    for (std::int64_t r = 1; r <= budget; ++r) {
        for (int v = 0; v < n; ++v) {
            bool winning = false;
            for (const auto& [p, targets] : succ[static_cast<std::size_t>(v)]) {
                if (p > r) break;
                bool all = true;
                for (int w : targets)
                    if (!sol.win[static_cast<std::size_t>(w)][static_cast<std::size_t>(r - p)]) {
                        all = false;
                        break;
                    }
                if (all) {
                    winning = true;
                    break;
                }
            }
            sol.win[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)] = winning;
        }
    }
    sol.p1_wins = sol.win[static_cast<std::size_t>(game.initial_node)]
                         [static_cast<std::size_t>(budget)];
    return sol;
}

std::int64_t default_wait(const CountdownGame& game) {
    std::int64_t w = 0;
    for (const CountdownMove& m : game.moves)
        if (w == 0 || m.duration < w) w = m.duration;
    return w == 0 ? 1 : w;
}

TimedGameAutomaton reduce(const CountdownGame& game, std::int64_t wait) {
    game.validate();
    if (wait < 1 || wait > kMaxConstant)
        throw Error(errc::invalid_game, "slow-cycle period must lie in [1, 100000]");

    const int nn = static_cast<int>(game.nodes.size());
    std::int64_t kk = std::max<std::int64_t>({1, game.budget, wait});
    for (const CountdownMove& m : game.moves) kk = std::max(kk, m.duration);
    const int bound = static_cast<int>(kk);
    const int b0 = static_cast<int>(game.budget);

    const ClockId cb = 0;  // elapsed total, checked against the budget
    const ClockId cc = 1;  // current commitment / slow-cycle phase

    auto single = [](ClockId clock, RelOp op, int n) {
        return SimpleConstraint{clock, -1, op, n};
    };
    auto diff = [](ClockId clock, ClockId other, RelOp op, int n) {
        return SimpleConstraint{clock, other, op, n};
    };

    std::vector<std::string> locations;
    std::vector<Player> owners;
    std::vector<Zone> state_zones;

    locations.push_back("*");
    owners.push_back(Player::Max);
    state_zones.push_back(Zone{false, {diff(cb, cc, RelOp::EQ, 0),
                                       single(cc, RelOp::LE, static_cast<int>(wait))}});

    const int node_base = 1;
    for (int v = 0; v < nn; ++v) {
        locations.push_back(game.nodes[static_cast<std::size_t>(v)]);
        owners.push_back(Player::Min);
        state_zones.push_back(
            Zone{false, {diff(cc, cb, RelOp::LE, 0), single(cb, RelOp::LE, b0)}});
    }

    // Commitment locations (node, duration), only for durations that can
    // still fit in the budget; longer moves can never be part of an
    // exact spend and would need negative slack below.
    std::map<std::pair<int, std::int64_t>, int> commit;
    for (int v = 0; v < nn; ++v) {
        std::set<std::int64_t> durations;
        for (const CountdownMove& m : game.moves)
            if (m.from == v && m.duration <= game.budget) durations.insert(m.duration);
        for (std::int64_t p : durations) {
            commit[{v, p}] = static_cast<int>(locations.size());
            locations.push_back("(" + game.nodes[static_cast<std::size_t>(v)] + "," +
                                std::to_string(p) + ")");
            owners.push_back(Player::Max);
            state_zones.push_back(Zone{false, {single(cc, RelOp::LE, static_cast<int>(p)),
                                               diff(cb, cc, RelOp::LE,
                                                    static_cast<int>(game.budget - p))}});
        }
    }

    const int nloc = static_cast<int>(locations.size());
    std::vector<ActionDef> actions;

    // Slow cycle: enters from any node once the whole budget has
    // elapsed, then turns forever with period `wait`.
    {
        ActionDef star;
        star.name = "*";
        star.resets = {true, true};
        star.enabled.assign(static_cast<std::size_t>(nloc), Zone::none());
        star.target.assign(static_cast<std::size_t>(nloc), -1);
        star.enabled[0] = Zone{false, {single(cc, RelOp::EQ, static_cast<int>(wait))}};
        star.target[0] = 0;
        for (int v = 0; v < nn; ++v) {
            star.enabled[static_cast<std::size_t>(node_base + v)] =
                Zone{false, {single(cb, RelOp::EQ, b0)}};
            star.target[static_cast<std::size_t>(node_base + v)] = 0;
        }
        actions.push_back(std::move(star));
    }

    // One commitment action per usable duration.
    std::set<std::int64_t> all_durations;
    for (const auto& [key, loc] : commit) all_durations.insert(key.second);
    for (std::int64_t p : all_durations) {
        ActionDef act;
        act.name = std::to_string(p);
        act.resets = {false, true};
        act.enabled.assign(static_cast<std::size_t>(nloc), Zone::none());
        act.target.assign(static_cast<std::size_t>(nloc), -1);
        for (int v = 0; v < nn; ++v) {
            auto it = commit.find({v, p});
            if (it == commit.end()) continue;
            act.enabled[static_cast<std::size_t>(node_base + v)] =
                Zone{false, {single(cc, RelOp::EQ, 0)}};
            act.target[static_cast<std::size_t>(node_base + v)] = it->second;
        }
        actions.push_back(std::move(act));
    }

    // One action per move, enabled at its commitment location once the
    // committed time has fully elapsed.
    for (int v = 0; v < nn; ++v) {
        std::set<std::pair<std::int64_t, int>> outgoing;
        for (const CountdownMove& m : game.moves)
            if (m.from == v && m.duration <= game.budget) outgoing.insert({m.duration, m.to});
        for (const auto& [p, to] : outgoing) {
            ActionDef act;
            act.name = game.nodes[static_cast<std::size_t>(v)] + "->" +
                       game.nodes[static_cast<std::size_t>(to)] + "#" + std::to_string(p);
            act.resets = {false, true};
            act.enabled.assign(static_cast<std::size_t>(nloc), Zone::none());
            act.target.assign(static_cast<std::size_t>(nloc), -1);
            const int from_loc = commit.at({v, p});
            act.enabled[static_cast<std::size_t>(from_loc)] =
                Zone{false, {single(cc, RelOp::EQ, static_cast<int>(p))}};
            act.target[static_cast<std::size_t>(from_loc)] = node_base + to;
            actions.push_back(std::move(act));
        }
    }

    Configuration initial{node_base + game.initial_node,
                          ClockValuation{{Rational(0), Rational(0)}}};
    return TimedGameAutomaton({"b", "c"}, bound, std::move(locations), std::move(owners),
                              std::move(state_zones), std::move(actions), initial);
}

CrossValidation cross_validate(const CountdownGame& game, std::int64_t wait,
                               std::uint64_t max_vertices) {
    CrossValidation result;
    result.wait = wait;
    result.p1_wins = dp_solve(game).p1_wins;
    const TimedGameAutomaton automaton = reduce(game, wait);
    const SolvedGame solved = solve_average_time(automaton, *automaton.initial(), max_vertices);
    result.value = solved.value();
    result.value_equals_wait = result.value == Rational(wait);
    result.vertices = solved.brg.num_vertices();
    return result;
}

}  // namespace atg
