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

#include "atg/automaton.hpp"

#include <algorithm>
#include <set>

#include "atg/region.hpp"

namespace atg {

const char* relop_name(RelOp op) {
    switch (op) {
    case RelOp::LT: return "<";
    case RelOp::LE: return "<=";
    case RelOp::EQ: return "=";
    case RelOp::GE: return ">=";
    case RelOp::GT: return ">";
    }
    return "?";
}

bool ClockValuation::is_corner() const {
    for (const auto& v : values)
        if (!v.is_integer()) return false;
    return true;
}

std::int64_t ClockValuation::denominator() const {
    std::int64_t d = 1;
    for (const auto& v : values) d = lcm64(d, v.den);
    return d;
}

bool ClockValuation::operator<(const ClockValuation& o) const {
    return std::lexicographical_compare(values.begin(), values.end(),
                                        o.values.begin(), o.values.end());
}

TimedGameAutomaton::TimedGameAutomaton(std::vector<std::string> clocks, int bound,
                                       std::vector<std::string> locations,
                                       std::vector<Player> owners, std::vector<Zone> state_zones,
                                       std::vector<ActionDef> actions,
                                       std::optional<Configuration> initial)
    : clocks_(std::move(clocks)), bound_(bound), locations_(std::move(locations)),
      owners_(std::move(owners)), state_zones_(std::move(state_zones)),
      actions_(std::move(actions)), initial_(std::move(initial)) {}

int TimedGameAutomaton::clock_index(const std::string& name) const {
    for (int i = 0; i < (int)clocks_.size(); ++i)
        if (clocks_[i] == name) return i;
    return -1;
}

int TimedGameAutomaton::location_index(const std::string& name) const {
    for (int i = 0; i < (int)locations_.size(); ++i)
        if (locations_[i] == name) return i;
    return -1;
}

int TimedGameAutomaton::action_index(const std::string& name) const {
    for (int i = 0; i < (int)actions_.size(); ++i)
        if (actions_[i].name == name) return i;
    return -1;
}

bool eval_constraint(const TimedGameAutomaton& a, const SimpleConstraint& c,
                     const ClockValuation& v) {
    if (c.clock < 0 || c.clock >= a.num_clocks() ||
        (c.is_difference() && c.other >= a.num_clocks()))
        throw Error(errc::unknown_clock, "constraint references an unknown clock");
    Rational lhs = c.is_difference() ? v[c.clock] - v[c.other] : v[c.clock];
    Rational rhs((std::int64_t)c.bound);
    switch (c.op) {
    case RelOp::LT: return lhs < rhs;
    case RelOp::LE: return lhs <= rhs;
    case RelOp::EQ: return lhs == rhs;
    case RelOp::GE: return lhs >= rhs;
    case RelOp::GT: return lhs > rhs;
    }
    return false;
}

bool eval_zone(const TimedGameAutomaton& a, const Zone& z, const ClockValuation& v) {
    if (z.never) return false;
    for (const auto& c : z.conjuncts)
        if (!eval_constraint(a, c, v)) return false;
    return true;
}

bool in_state_zone(const TimedGameAutomaton& a, const Configuration& q) {
    return eval_zone(a, a.state_zone(q.location), q.valuation);
}

namespace {

void check_zone_constants(const TimedGameAutomaton& a, const Zone& z, const std::string& where,
                          ValidationReport& report) {
    for (const auto& c : z.conjuncts) {
        if (c.bound < 0 || c.bound > a.bound())
            report.violations.push_back(
                {"constants", where + ": constant " + std::to_string(c.bound) +
                                  " outside [0, " + std::to_string(a.bound()) + "]"});
    }
}

} // namespace

ValidationReport validate(const TimedGameAutomaton& a) {
    ValidationReport report;

    if (a.num_clocks() == 0)
        report.violations.push_back({"clocks", "automaton has no clocks"});
    if (a.num_locations() == 0)
        report.violations.push_back({"locations", "automaton has no locations"});
    if (a.num_actions() == 0)
        report.violations.push_back({"actions", "automaton has no actions"});
    if (a.bound() < 1)
        report.violations.push_back({"bound", "clock bound must be at least 1"});
    if (!report.ok()) return report;

    std::set<std::string> names;
    for (int c = 0; c < a.num_clocks(); ++c)
        if (!names.insert(a.clock_name(c)).second)
            report.violations.push_back({"clocks", "duplicate clock name " + a.clock_name(c)});
    names.clear();
    for (int l = 0; l < a.num_locations(); ++l)
        if (!names.insert(a.location_name(l)).second)
            report.violations.push_back(
                {"locations", "duplicate location name " + a.location_name(l)});
    names.clear();
    for (int x = 0; x < a.num_actions(); ++x)
        if (!names.insert(a.action_name(x)).second)
            report.violations.push_back({"actions", "duplicate action name " + a.action_name(x)});

    for (int l = 0; l < a.num_locations(); ++l)
        check_zone_constants(a, a.state_zone(l), "S at " + a.location_name(l), report);

    for (int x = 0; x < a.num_actions(); ++x) {
        const ActionDef& act = a.action(x);
        for (int l = 0; l < a.num_locations(); ++l) {
            check_zone_constants(a, act.enabled[l],
                                 "E(" + act.name + ") at " + a.location_name(l), report);
            if (!act.enabled[l].never && act.target[l] < 0)
                report.violations.push_back(
                    {"delta", "δ not total: action " + act.name + " enabled at " +
                                  a.location_name(l) + " without a target"});
        }
    }

    if (a.initial()) {
        const Configuration& q = *a.initial();
        if ((int)q.valuation.values.size() != a.num_clocks()) {
            report.violations.push_back({"initial", "initial valuation arity mismatch"});
        } else {
            for (int c = 0; c < a.num_clocks(); ++c) {
                const Rational& v = q.valuation[c];
                if (v < Rational(0) || v > Rational(a.bound()))
                    report.violations.push_back(
                        {"initial", "initial clock " + a.clock_name(c) + " outside [0, k]"});
            }
            if (report.ok() && !in_state_zone(a, q))
                report.violations.push_back({"initial", "initial state outside S"});
        }
    }
    if (!report.ok()) return report;

    // Availability: every region of S must admit some boundary-reachable action.
    std::vector<ClockRegion> all = enumerate_regions(a.num_clocks(), a.bound());
    for (int l = 0; l < a.num_locations(); ++l) {
        for (const auto& cr : all) {
            Region r{l, cr};
            if (!zone_test(a, cr, a.state_zone(l))) continue;
            bool available = false;
            for (const auto& chain_cr : future_chain(a, r)) {
                for (int x = 0; x < a.num_actions() && !available; ++x)
                    if (action_successor(a, Region{l, chain_cr}, x)) available = true;
                if (available) break;
            }
            if (!available)
                report.violations.push_back(
                    {"availability", "no legal timed action from " + to_string(a, r)});
        }
    }
    return report;
}

Configuration delay(const TimedGameAutomaton& a, const Configuration& q, const Rational& t) {
    if (t < Rational(0)) throw Error(errc::bound_exceeded, "negative delay");
    Configuration out = q;
    for (auto& v : out.valuation.values) {
        v += t;
        if (v > Rational(a.bound()))
            throw Error(errc::bound_exceeded, "delay pushes a clock past the bound");
    }
    // Walk the time-successor chain to certify that no intermediate region
    // leaves S.
    ClockRegion r = region_of(q.valuation);
    ClockRegion target = region_of(out.valuation);
    const Zone& s = a.state_zone(q.location);
    while (true) {
        if (!zone_test(a, r, s))
            throw Error(errc::left_state_zone, "delay crosses a region outside S");
        if (r == target) break;
        auto next = time_successor(r, a.bound());
        if (!next) throw Error(errc::bound_exceeded, "delay leaves the bounded clock space");
        r = *next;
    }
    return out;
}

Configuration apply_action(const TimedGameAutomaton& a, const Configuration& q, ActionId act) {
    if (act < 0 || act >= a.num_actions())
        throw Error(errc::unknown_action, "action id out of range");
    const ActionDef& def = a.action(act);
    if (def.target[q.location] < 0 || !eval_zone(a, def.enabled[q.location], q.valuation))
        throw Error(errc::not_enabled,
                    "action " + def.name + " not enabled at " + a.location_name(q.location));
    Configuration out;
    out.location = def.target[q.location];
    out.valuation = q.valuation;
    for (int c = 0; c < a.num_clocks(); ++c)
        if (def.resets[c]) out.valuation[c] = Rational(0);
    if (!in_state_zone(a, out))
        throw Error(errc::target_outside_s,
                    "action " + def.name + " leads outside S at " +
                        a.location_name(out.location));
    return out;
}

Configuration timed_succ(const TimedGameAutomaton& a, const Configuration& q,
                         const TimedAction& ta) {
    return apply_action(a, delay(a, q, ta.delay), ta.action);
}

void Run::extend(const TimedGameAutomaton& a, const TimedAction& ta) {
    Configuration next = timed_succ(a, current(), ta);
    steps_.push_back({ta, std::move(next)});
    cumulative_.push_back(cumulative_.back() + ta.delay);
}

} // namespace atg
