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

#ifndef ATG_IO_HPP
#define ATG_IO_HPP

#include <string>

#include "atg/automaton.hpp"
#include "atg/brg.hpp"
#include "atg/countdown.hpp"
#include "atg/mpg.hpp"
#include "atg/pipeline.hpp"

namespace atg {

/// "p" or "p/q", exact.
Rational parse_rational(const std::string& text);

/// Conjunctions of `c REL n` and `c - c' REL n` joined with `&&`,
/// REL one of < <= = >= >. Clock names resolve against `clock_names`.
Zone parse_zone(const std::string& text, const std::vector<std::string>& clock_names);
std::string zone_to_string(const Zone& zone, const std::vector<std::string>& clock_names);

TimedGameAutomaton parse_automaton(const std::string& json_text);
std::string serialize_automaton(const TimedGameAutomaton& automaton);

MeanPayoffGame parse_mpg(const std::string& json_text);
std::string serialize_mpg(const MeanPayoffGame& game);
std::string serialize_mpg_solution(const SolveResult& result);
std::string serialize_mpg_values(const std::vector<Rational>& values);

CountdownGame parse_countdown(const std::string& json_text);
std::string serialize_countdown(const CountdownGame& game);
std::string serialize_countdown_solution(const CountdownGame& game,
                                         const CountdownSolution& solution);
std::string serialize_cross_validation(const CrossValidation& result);

std::string brg_to_json(const TimedGameAutomaton& automaton, const BoundaryRegionGraph& brg);
std::string brg_to_dot(const TimedGameAutomaton& automaton, const BoundaryRegionGraph& brg);
std::string brg_to_text(const TimedGameAutomaton& automaton, const BoundaryRegionGraph& brg);

std::string serialize_solved_game(const TimedGameAutomaton& automaton, const SolvedGame& solved);
std::string serialize_strategy(const TimedGameAutomaton& automaton, const SolvedGame& solved,
                               const BoundaryStrategy& strategy);
std::string serialize_trace(const TimedGameAutomaton& automaton, const SimTrace& trace);
std::string trace_to_text(const TimedGameAutomaton& automaton, const SimTrace& trace);

std::string serialize_validation(const ValidationReport& report);
std::string validation_to_text(const ValidationReport& report);

///// Reads a whole file; errc::parse_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace atg

#endif  // ATG_IO_HPP
