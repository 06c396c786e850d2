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

#ifndef ATG_TESTS_SUPPORT_HPP
#define ATG_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "atg/automaton.hpp"

namespace atg::testing {

#ifdef ATG_FIXTURES_DIR
inline std::string fixture(const std::string& name) {
    return std::string(ATG_FIXTURES_DIR) + "/" + name;
}
#endif

/// One Min location, one clock, bound 1; action `a` fires exactly at
/// c = 1 and resets.
inline TimedGameAutomaton cycle_automaton() {
    ActionDef a;
    a.name = "a";
    a.resets = {true};
    a.enabled = {Zone{false, {{0, -1, RelOp::EQ, 1}}}};
    a.target = {0};
    return TimedGameAutomaton({"c"}, 1, {"l"}, {Player::Min}, {Zone::always()}, {a},
                              Configuration{0, ClockValuation({Rational(0)})});
}

/// Min and Max location, one clock, bound 2; `a` leaves the Min
/// location while c <= 1, `b` leaves the Max location while c <= 2,
/// both resetting. S matches the guards so no state is ever stuck.
inline TimedGameAutomaton handoff_automaton() {
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

inline ClockValuation vals(std::vector<Rational> v) { return ClockValuation(std::move(v)); }

}  // namespace atg::testing

#endif  // ATG_TESTS_SUPPORT_HPP
