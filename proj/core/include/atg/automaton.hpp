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

#ifndef ATG_AUTOMATON_HPP
#define ATG_AUTOMATON_HPP

#include <optional>
#include <string>
#include <vector>

#include "atg/player.hpp"
#include "atg/rational.hpp"

namespace atg {

using ClockId = int;
using LocationId = int;
using ActionId = int;

enum class RelOp { LT, LE, EQ, GE, GT };

const char* relop_name(RelOp op);

/// Atomic clock constraint: `c REL bound` or `c - other REL bound`.
struct SimpleConstraint {
    ClockId clock = 0;
    ClockId other = -1; // -1 for single-clock constraints
    RelOp op = RelOp::LE;
    int bound = 0;

    bool is_difference() const { return other >= 0; }
};

/// Conjunction of simple constraints; empty = true. `never` is the explicit
/// empty zone used to disable an action at a location.
struct Zone {
    bool never = false;
    std::vector<SimpleConstraint> conjuncts;

    static Zone always() { return Zone{}; }
    static Zone none() { return Zone{true, {}}; }
    bool is_always() const { return !never && conjuncts.empty(); }
};

/// Exact clock valuation, one rational per clock, all in [0, k].
struct ClockValuation {
    std::vector<Rational> values;

    ClockValuation() = default;
    explicit ClockValuation(std::vector<Rational> v) : values(std::move(v)) {}

    int size() const { return (int)values.size(); }
    const Rational& operator[](int c) const { return values[c]; }
    Rational& operator[](int c) { return values[c]; }

    bool is_corner() const;
    /// Least common denominator of all entries.
    std::int64_t denominator() const;

    bool operator==(const ClockValuation& o) const { return values == o.values; }
    bool operator<(const ClockValuation& o) const;
};

struct Configuration {
    LocationId location = 0;
    ClockValuation valuation;

    bool operator==(const Configuration& o) const {
        return location == o.location && valuation == o.valuation;
    }
    bool operator<(const Configuration& o) const {
        if (location != o.location) return location < o.location;
        return valuation < o.valuation;
    }
};

struct TimedAction {
    Rational delay;
    ActionId action = 0;
};

struct ActionDef {
    std::string name;
    std::vector<bool> resets;   // indexed by clock
    std::vector<Zone> enabled;  // indexed by location
    std::vector<int> target;    // indexed by location, -1 where the action is undefined
};

/// k-bounded two-player timed game automaton. Clock values never exceed the
/// bound; S restricts the legal configurations per location; each action has
/// a per-location enabling zone, reset set and target location.
class TimedGameAutomaton {
  public:
    TimedGameAutomaton() = default;
    TimedGameAutomaton(std::vector<std::string> clocks, int bound,
                       std::vector<std::string> locations, std::vector<Player> owners,
                       std::vector<Zone> state_zones, std::vector<ActionDef> actions,
                       std::optional<Configuration> initial);

    int num_clocks() const { return (int)clocks_.size(); }
    int num_locations() const { return (int)locations_.size(); }
    int num_actions() const { return (int)actions_.size(); }
    int bound() const { return bound_; }

    const std::string& clock_name(ClockId c) const { return clocks_[c]; }
    const std::string& location_name(LocationId l) const { return locations_[l]; }
    const std::string& action_name(ActionId a) const { return actions_[a].name; }
    int clock_index(const std::string& name) const;        // -1 if unknown
    int location_index(const std::string& name) const;     // -1 if unknown
    int action_index(const std::string& name) const;       // -1 if unknown

    Player owner(LocationId l) const { return owners_[l]; }
    const Zone& state_zone(LocationId l) const { return state_zones_[l]; }
    const ActionDef& action(ActionId a) const { return actions_[a]; }
    const std::optional<Configuration>& initial() const { return initial_; }

  private:
    std::vector<std::string> clocks_;
    int bound_ = 1;
    std::vector<std::string> locations_;
    std::vector<Player> owners_;
    std::vector<Zone> state_zones_;
    std::vector<ActionDef> actions_;
    std::optional<Configuration> initial_;
};

struct Violation {
    std::string kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact evaluation of a single constraint / zone at a valuation.
bool eval_constraint(const TimedGameAutomaton& a, const SimpleConstraint& c,
                     const ClockValuation& v);
bool eval_zone(const TimedGameAutomaton& a, const Zone& z, const ClockValuation& v);

/// True iff the configuration satisfies its location's state zone.
bool in_state_zone(const TimedGameAutomaton& a, const Configuration& q);

/// Structural validation: owner partition, constants within [0, bound],
/// target totality where enabled, initial membership, and region-wise
/// availability of at least one legal timed action from every S region.
ValidationReport validate(const TimedGameAutomaton& a);

/// Time elapse by t >= 0. Throws bound_exceeded if any clock would pass the
/// bound and left_state_zone if an intermediate region leaves S.
Configuration delay(const TimedGameAutomaton& a, const Configuration& q, const Rational& t);

/// Discrete step. Throws not_enabled / target_outside_s.
Configuration apply_action(const TimedGameAutomaton& a, const Configuration& q, ActionId act);

/// delay followed by apply_action.
Configuration timed_succ(const TimedGameAutomaton& a, const Configuration& q,
                         const TimedAction& ta);

/// Admissible finite run: every step is a legal timed action.
class Run {
  public:
    explicit Run(Configuration initial) : initial_(std::move(initial)) { cumulative_.push_back(Rational(0)); }

    const Configuration& initial() const { return initial_; }
    const Configuration& current() const {
        return steps_.empty() ? initial_ : steps_.back().after;
    }
    int length() const { return (int)steps_.size(); }

    /// Extends the run; validates the step via timed_succ.
    void extend(const TimedGameAutomaton& a, const TimedAction& ta);

    /// Total time over the first n steps (n <= length()).
    Rational time(int n) const { return cumulative_[n]; }
    Rational total_time() const { return cumulative_.back(); }
    /// Average time per transition over the first n steps, n >= 1.
    Rational average(int n) const { return cumulative_[n] / Rational(n); }

    struct Step {
        TimedAction move;
        Configuration after;
    };
    const std::vector<Step>& steps() const { return steps_; }

  private:
    Configuration initial_;
    std::vector<Step> steps_;
    std::vector<Rational> cumulative_;
};

} // namespace atg

#endif
