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

#include "atg/pipeline.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace atg {

namespace {

void check_start(const TimedGameAutomaton& automaton, const Configuration& start) {
    if (start.valuation.size() != automaton.num_clocks())
        throw Error(errc::invalid_automaton, "start valuation arity mismatch");
    if (start.location < 0 || start.location >= automaton.num_locations())
        throw Error(errc::unknown_location, "start location out of range");
    for (int c = 0; c < automaton.num_clocks(); ++c)
        if (start.valuation[c] < Rational(0) || start.valuation[c] > Rational(automaton.bound()))
            throw Error(errc::bound_exceeded, "start valuation outside [0, bound]");
    if (!in_state_zone(automaton, start))
        throw Error(errc::left_state_zone, "start state violates its state zone");
}

}  // namespace

Rational SimTrace::average(int n) const {
    if (n < 1 || n > static_cast<int>(cumulative.size()))
        throw Error(errc::too_large, "average horizon exceeds trace length");
    return cumulative[static_cast<std::size_t>(n - 1)] / Rational(n);
}

SolvedGame solve_average_time(const TimedGameAutomaton& automaton, const Configuration& start,
                              std::uint64_t max_vertices, const SolveOptions& options) {
    SolvedGame out;
    out.brg = explore(automaton, start, max_vertices);
    ScaledGame scaled = to_mpg(out.brg);
    out.scale = scaled.scale;
    SolveResult r = solve(scaled.game, options);
    out.values.reserve(r.values.size());
    for (const Rational& v : r.values) out.values.push_back(v / Rational(out.scale));
    out.min_strategy = std::move(r.min_strategy);
    out.max_strategy = std::move(r.max_strategy);
    out.verified = r.verified;
    return out;
}

bool decide(const TimedGameAutomaton& automaton, const Configuration& start,
            const Rational& threshold, std::uint64_t max_vertices) {
    return solve_average_time(automaton, start, max_vertices).value() <= threshold;
}

BoundaryStrategy extract_boundary_strategy(const TimedGameAutomaton& automaton,
                                           const SolvedGame& solved, Player player) {
    (void)automaton;
    BoundaryStrategy bs;
    bs.player = player;
    const PositionalStrategy& strat =
        player == Player::Min ? solved.min_strategy : solved.max_strategy;
    std::set<Region> mixed;
    for (int v = 0; v < solved.brg.num_vertices(); ++v) {
        const BrgVertex& vertex = solved.brg.vertices[static_cast<std::size_t>(v)];
        if (vertex.owner != player) continue;
        const int e = strat[static_cast<std::size_t>(v)];
        if (e < 0)
            throw Error(errc::strategy_undefined,
                        "no strategy edge at vertex " + std::to_string(v));
        const BrgEdge& edge = solved.brg.edges[static_cast<std::size_t>(e)];
        const StrategyDecision decision{edge.witness, edge.action, edge.via};
        bs.by_vertex.emplace(std::make_pair(vertex.config, vertex.region), decision);
        const Region key{vertex.config.location, vertex.region};
        auto [it, inserted] = bs.by_region.emplace(key, decision);
        if (!inserted && !(it->second == decision)) {
            bs.region_uniform = false;
            mixed.insert(key);
        }
    }
    bs.mixed_regions.assign(mixed.begin(), mixed.end());
    return bs;
}

SimTrace simulate(const TimedGameAutomaton& automaton, const Configuration& start, int steps,
                  const SimPlayer& min_player, const SimPlayer& max_player) {
    check_start(automaton, start);
    for (const SimPlayer* p : {&min_player, &max_player}) {
        if (p->strategy == nullptr)
            throw Error(errc::strategy_undefined, "simulation player without a strategy");
        if (p->epsilon && !(*p->epsilon > Rational(0)))
            throw Error(errc::empty_window, "epsilon must be positive");
    }
    if (min_player.strategy->player != Player::Min || max_player.strategy->player != Player::Max)
        throw Error(errc::strategy_undefined, "player slot and strategy owner disagree");

    SimTrace trace;
    trace.initial = start;
    trace.initial_region = region_of(start.valuation);
    Configuration config = start;
    ClockRegion region = trace.initial_region;
    Rational total(0);

    for (int i = 0; i < steps; ++i) {
        const Player owner = automaton.owner(config.location);
        const SimPlayer& p = owner == Player::Min ? min_player : max_player;
        // Decisions are read off the per-region table, never the exact
        // per-vertex one: perturbed plays leave the boundary states, and
        // basing all moves on the nominal region keeps every eps / pure
        // combination on one and the same region walk.
        auto itr = p.strategy->by_region.find(Region{config.location, region});
        if (itr == p.strategy->by_region.end())
            throw Error(errc::strategy_undefined,
                        "no decision for a state reached at step " + std::to_string(i));
        const StrategyDecision* decision = &itr->second;

        Rational t = Rational(decision->witness.bound) - config.valuation[decision->witness.clock];
        if (t < Rational(0)) t = Rational(0);
        if (p.epsilon) {
            const BoundaryWindow win = boundary_times(automaton, config.valuation, decision->via);
            if (win.hi != win.lo) {
                const Rational width = win.hi - win.lo;
                const Rational delta = min(*p.epsilon, width) / Rational(2);
                if (t == win.lo)
                    t = win.lo + delta;
                else if (t == win.hi)
                    t = win.hi - delta;
                else
                    throw Error(errc::strategy_undefined,
                                "decision does not touch the delay window");
            } else {
                t = win.lo;  // thin target: the exact move is forced
            }
        }

        const std::optional<Region> next =
            action_successor(automaton, Region{config.location, decision->via}, decision->action);
        if (!next)
            throw Error(errc::strategy_undefined, "decision fires a disabled action");

        trace.steps.push_back({config, region, t, decision->action});
        const ActionDef& def = automaton.action(decision->action);
        ClockValuation sv = config.valuation;
        for (int c = 0; c < automaton.num_clocks(); ++c)
            sv.values[static_cast<std::size_t>(c)] =
                def.resets[static_cast<std::size_t>(c)] ? Rational(0) : config.valuation[c] + t;
        config = Configuration{next->location, std::move(sv)};
        region = next->clocks;
        total = total + t;
        trace.cumulative.push_back(total);
    }
    trace.final_config = std::move(config);
    trace.final_region = std::move(region);
    return trace;
}

std::vector<ClockValuation> sample_region(const ClockRegion& region, int m) {
    if (m < 1) throw Error(errc::too_large, "need at least one sample");
    const int nclocks = static_cast<int>(region.int_part.size());
    // Fractions (i (m+1) - m + j) / den for class i and sample j are
    // strictly increasing in i, pairwise distinct across j, and stay
    // inside (0, 1/2), so every sample lies in the region proper.
    const std::int64_t den =
        2 * static_cast<std::int64_t>(m + 1) * std::max(1, nclocks);
    std::vector<ClockValuation> samples;
    samples.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        ClockValuation v;
        v.values.resize(static_cast<std::size_t>(nclocks));
        for (int c = 0; c < nclocks; ++c) {
            const int i = region.class_of(c);
            Rational frac(0);
            if (i > 0)
                frac = Rational(static_cast<std::int64_t>(i) * (m + 1) - m + j, den);
            v.values[static_cast<std::size_t>(c)] = Rational(region.int_part[c]) + frac;
        }
        samples.push_back(std::move(v));
    }
    return samples;
}

std::vector<Rational> regional_constancy_probe(const TimedGameAutomaton& automaton,
                                               const Region& region, int m,
                                               std::uint64_t max_vertices) {
    std::vector<Rational> values;
    for (ClockValuation& v : sample_region(region.clocks, m)) {
        const Configuration start{region.location, std::move(v)};
        values.push_back(solve_average_time(automaton, start, max_vertices).value());
    }
    return values;
}

SimpleFitReport simple_time_probe(const TimedGameAutomaton& automaton,
                                  const BoundaryStrategy& min_strategy,
                                  const BoundaryStrategy& max_strategy, const Region& region,
                                  int steps, int m) {
    SimpleFitReport report;
    report.strategies_region_uniform =
        min_strategy.region_uniform && max_strategy.region_uniform;
    for (ClockValuation& v : sample_region(region.clocks, m)) {
        const Configuration start{region.location, v};
        const SimTrace trace =
            simulate(automaton, start, steps, pure(min_strategy), pure(max_strategy));
        report.samples.emplace_back(std::move(v), trace.total());
    }

    auto all_equal_integer = [&](auto&& value_of, Rational& out) {
        const Rational first = value_of(report.samples.front());
        for (const auto& s : report.samples)
            if (value_of(s) != first) return false;
        if (first.den != 1) return false;
        out = first;
        return true;
    };

    Rational e;
    if (all_equal_integer([](const auto& s) { return s.second; }, e)) {
        report.fits = true;
        report.fn = {true, e.num, 0};
        return report;
    }
    for (int c = 0; c < static_cast<int>(region.clocks.int_part.size()); ++c) {
        if (all_equal_integer([&](const auto& s) { return s.second + s.first[c]; }, e)) {
            report.fits = true;
            report.fn = {false, e.num, c};
            return report;
        }
    }
    return report;
}

Rational transient_bound(const TimedGameAutomaton& automaton, const SolvedGame& solved) {
    // Follow the per-region decision tables (the tables simulate()
    // plays) from the start until a vertex repeats. Past that point the
    // play cycles, and when the cycle mean equals the value,
    // |time(j) - j * value| is periodic and its maximum has already
    // occurred. The bound covers both directions: time running ahead of
    // the value and lagging behind it.
    const BoundaryStrategy min_table = extract_boundary_strategy(automaton, solved, Player::Min);
    const BoundaryStrategy max_table = extract_boundary_strategy(automaton, solved, Player::Max);

    std::vector<int> seen(static_cast<std::size_t>(solved.brg.num_vertices()), -1);
    std::vector<Rational> cum_at(static_cast<std::size_t>(solved.brg.num_vertices()), Rational(0));
    int v = 0;
    Rational cum(0);
    Rational excess(0);
    std::int64_t step = 0;
    const Rational val = solved.value();
    while (seen[static_cast<std::size_t>(v)] < 0) {
        seen[static_cast<std::size_t>(v)] = static_cast<int>(step);
        cum_at[static_cast<std::size_t>(v)] = cum;
        const BrgVertex& vertex = solved.brg.vertices[static_cast<std::size_t>(v)];
        const BoundaryStrategy& table = vertex.owner == Player::Min ? min_table : max_table;
        auto it = table.by_region.find(Region{vertex.config.location, vertex.region});
        if (it == table.by_region.end())
            throw Error(errc::strategy_undefined, "no region decision along the optimal play");
        const StrategyDecision& d = it->second;
        const BrgEdge* chosen = nullptr;
        for (int e : solved.brg.out[static_cast<std::size_t>(v)]) {
            const BrgEdge& edge = solved.brg.edges[static_cast<std::size_t>(e)];
            if (edge.witness == d.witness && edge.action == d.action && edge.via == d.via) {
                chosen = &edge;
                break;
            }
        }
        if (chosen == nullptr)
            throw Error(errc::strategy_undefined, "region decision matches no boundary move");
        cum = cum + chosen->delay;
        ++step;
        const Rational gap = abs(cum - Rational(step) * val);
        if (gap > excess) excess = gap;
        v = chosen->dst;
    }
    const std::int64_t cycle_len = step - seen[static_cast<std::size_t>(v)];
    const Rational cycle_mean =
        (cum - cum_at[static_cast<std::size_t>(v)]) / Rational(cycle_len);
    if (cycle_mean != val)
        throw Error(errc::strategy_undefined,
                    "region-table play misses the value; no constant transient exists");
    return excess + Rational(2 * automaton.bound());
}

}  // namespace atg
