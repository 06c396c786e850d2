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

#include "atg/brg.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace atg {

BoundaryWindow boundary_times(const TimedGameAutomaton& automaton, const ClockValuation& s,
                              const ClockRegion& target) {
    const int n = automaton.num_clocks();
    if (s.size() != n || static_cast<int>(target.int_part.size()) != n)
        throw Error(errc::not_in_future, "clock arity mismatch");

    // Offsets d(c) = s(c) - int_part(c). A delay t puts s + t in the
    // closure iff every offset lands in [0,1] (exactly 0 for the
    // zero-fraction class), offsets agree within a class, and classes
    // keep their order. Only the [0,1] part depends on t.
    std::vector<Rational> d(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        d[static_cast<std::size_t>(c)] = s[c] - Rational(target.int_part[c]);

    Rational prev;
    bool have_prev = false;
    for (std::size_t i = 1; i < target.classes.size(); ++i) {
        const Rational di = d[static_cast<std::size_t>(target.classes[i][0])];
        for (ClockId c : target.classes[i])
            if (d[static_cast<std::size_t>(c)] != di)
                throw Error(errc::not_in_future, "offsets split a fraction class");
        if (have_prev && di < prev)
            throw Error(errc::not_in_future, "offsets reorder the fraction classes");
        prev = di;
        have_prev = true;
    }

    bool have_lo = false, have_hi = false;
    Rational lo, hi;
    BoundaryWitness lo_w, hi_w;
    auto lower = [&](const Rational& t, int bound, ClockId c) {
        if (!have_lo || t > lo) {
            lo = t;
            lo_w = {bound, c};
            have_lo = true;
        }
    };
    auto upper = [&](const Rational& t, int bound, ClockId c) {
        if (!have_hi || t < hi) {
            hi = t;
            hi_w = {bound, c};
            have_hi = true;
        }
    };
    for (ClockId c : target.classes[0]) {
        const Rational t = Rational(target.int_part[c]) - s[c];
        lower(t, target.int_part[c], c);
        upper(t, target.int_part[c], c);
    }
    for (std::size_t i = 1; i < target.classes.size(); ++i) {
        for (ClockId c : target.classes[i]) {
            lower(Rational(target.int_part[c]) - s[c], target.int_part[c], c);
            upper(Rational(target.int_part[c] + 1) - s[c], target.int_part[c] + 1, c);
        }
    }
    if (!have_lo || !have_hi)
        throw Error(errc::not_in_future, "region constrains no clock");
    if (hi < lo || hi < Rational(0))
        throw Error(errc::not_in_future, "the time line through s misses the region closure");
    if (lo < Rational(0)) lo = Rational(0);  // witness delay clamps to 0 the same way
    return {lo, hi, lo_w, hi_w};
}

std::vector<BoundaryMove> boundary_moves(const TimedGameAutomaton& automaton,
                                         const Configuration& config, const ClockRegion& region) {
    if (!in_closure(config.valuation, region))
        throw Error(errc::not_in_future, "state outside its region closure");
    std::vector<BoundaryMove> moves;
    const Region here{config.location, region};
    const std::vector<ClockRegion> chain = future_chain(automaton, here);
    for (const ClockRegion& via : chain) {
        const BoundaryWindow win = boundary_times(automaton, config.valuation, via);
        for (ActionId act = 0; act < automaton.num_actions(); ++act) {
            const std::optional<Region> next =
                action_successor(automaton, Region{config.location, via}, act);
            if (!next) continue;
            auto emit = [&](const Rational& t, const BoundaryWitness& w) {
                BoundaryMove m;
                m.delay = t;
                m.witness = w;
                m.via = via;
                m.action = act;
                const ActionDef& def = automaton.action(act);
                ClockValuation sv = config.valuation;
                for (int c = 0; c < automaton.num_clocks(); ++c)
                    sv.values[static_cast<std::size_t>(c)] =
                        def.resets[static_cast<std::size_t>(c)] ? Rational(0)
                                                                : config.valuation[c] + t;
                m.target = Configuration{next->location, std::move(sv)};
                m.target_region = next->clocks;
                moves.push_back(std::move(m));
            };
            emit(win.lo, win.lo_witness);
            if (win.hi != win.lo) emit(win.hi, win.hi_witness);
        }
    }
    return moves;
}

BoundaryRegionGraph explore(const TimedGameAutomaton& automaton, const Configuration& start,
                            std::uint64_t max_vertices) {
    if (start.valuation.size() != automaton.num_clocks())
        throw Error(errc::invalid_automaton, "start valuation arity mismatch");
    if (start.location < 0 || start.location >= automaton.num_locations())
        throw Error(errc::unknown_location, "start location out of range");
    for (int c = 0; c < automaton.num_clocks(); ++c)
        if (start.valuation[c] < Rational(0) || start.valuation[c] > Rational(automaton.bound()))
            throw Error(errc::bound_exceeded, "start valuation outside [0, bound]");
    if (!in_state_zone(automaton, start))
        throw Error(errc::left_state_zone, "start state violates its state zone");

    BoundaryRegionGraph brg;
    std::map<std::pair<Configuration, ClockRegion>, int> seen;
    std::deque<int> queue;

    auto intern = [&](const Configuration& config, const ClockRegion& region) {
        const auto key = std::make_pair(config, region);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        if (brg.vertices.size() >= max_vertices)
            throw Error(errc::explosion_guard,
                        "more than " + std::to_string(max_vertices) + " boundary states");
        const int id = brg.num_vertices();
        brg.vertices.push_back({config, region, automaton.owner(config.location)});
        brg.out.emplace_back();
        seen.emplace(key, id);
        queue.push_back(id);
        return id;
    };

    intern(start, region_of(start.valuation));
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        // Copy: intern() may reallocate the vertex vector while moves
        // of v are being expanded.
        const Configuration config = brg.vertices[static_cast<std::size_t>(v)].config;
        const ClockRegion region = brg.vertices[static_cast<std::size_t>(v)].region;
        for (BoundaryMove& m : boundary_moves(automaton, config, region)) {
            const int w = intern(m.target, m.target_region);
            const int e = brg.num_edges();
            brg.edges.push_back({v, w, m.delay, m.witness, std::move(m.via), m.action});
            brg.out[static_cast<std::size_t>(v)].push_back(e);
        }
    }
    return brg;
}

ScaledGame to_mpg(const BoundaryRegionGraph& brg) {
    std::int64_t scale = 1;
    for (const BrgEdge& e : brg.edges) {
        const std::int64_t g = std::gcd(scale, e.delay.den);
        const __int128 l = static_cast<__int128>(scale / g) * e.delay.den;
        if (l > 1'000'000'000'000'000LL)
            throw Error(errc::overflow, "common delay denominator overflows");
        scale = static_cast<std::int64_t>(l);
    }
    std::vector<Player> owners;
    owners.reserve(brg.vertices.size());
    for (const BrgVertex& v : brg.vertices) owners.push_back(v.owner);
    std::vector<MpgEdge> edges;
    edges.reserve(brg.edges.size());
    for (const BrgEdge& e : brg.edges)
        edges.push_back({e.src, e.dst, e.delay.num * (scale / e.delay.den)});
    return {MeanPayoffGame(std::move(owners), std::move(edges)), scale};
}

CornerPointReport corner_point_view(const BoundaryRegionGraph& brg) {
    CornerPointReport report;
    report.corner_start =
        !brg.vertices.empty() && brg.vertices.front().config.valuation.is_corner();
    report.integral_delays = true;
    for (const BrgEdge& e : brg.edges)
        if (e.delay.den != 1) report.integral_delays = false;
    report.integral_valuations = true;
    for (const BrgVertex& v : brg.vertices)
        for (const Rational& x : v.config.valuation.values)
            if (x.den != 1) report.integral_valuations = false;
    return report;
}

}  // namespace atg
