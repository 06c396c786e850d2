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

#ifndef ATG_COUNTDOWN_HPP
#define ATG_COUNTDOWN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "atg/automaton.hpp"
#include "atg/rational.hpp"

namespace atg {

/// Countdown game: player 1 picks a duration available at the current
/// node, player 2 picks among the moves of that duration. Player 1
/// wins by spending the budget exactly.
struct CountdownMove {
    int from = 0;
    int to = 0;
    std::int64_t duration = 0;  // > 0
};

struct CountdownGame {
    std::vector<std::string> nodes;
    std::vector<CountdownMove> moves;
    int initial_node = 0;
    std::int64_t budget = 0;

    /// Structural checks; throws errc::invalid_game on violation.
    void validate() const;
};

/// win[node][r]: can player 1 spend exactly r from node?
struct CountdownSolution {
    std::vector<std::vector<bool>> win;
    bool p1_wins = false;  // from initial_node with the full budget
};

CountdownSolution dp_solve(const CountdownGame& game);

/// Timed game whose region structure simulates the countdown game:
/// clock b tracks total elapsed time against the budget, clock c the
/// current duration commitment. Node locations belong to Min, duration
/// commitments and the absorbing slow cycle (period `wait`) to Max.
TimedGameAutomaton reduce(const CountdownGame& game, std::int64_t wait);

/// Smallest move duration, the default slow-cycle period.
std::int64_t default_wait(const CountdownGame& game);

struct CrossValidation {
    bool p1_wins = false;
    std::int64_t wait = 1;
    Rational value;             // average-time value of the reduction
    bool value_equals_wait = false;
    std::int64_t vertices = 0;  // boundary graph size, for reporting
};

/// Solves the countdown game combinatorially and its timed reduction
/// through the full pipeline, and reports both results side by side.
CrossValidation cross_validate(const CountdownGame& game, std::int64_t wait,
                               std::uint64_t max_vertices);

}  // namespace atg

#endif  // ATG_COUNTDOWN_HPP
