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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atg/brg.hpp"
#include "atg/countdown.hpp"
#include "atg/generate.hpp"
#include "atg/io.hpp"
#include "atg/mpg.hpp"
#include "atg/pipeline.hpp"

namespace {

using namespace atg;

struct GlobalOptions {
    std::uint64_t cap = 1'000'000;  // boundary graph / enumeration size guard
    std::uint64_t seed = 1;
    std::string out;     // empty = stdout
    std::string format = "json";
};

void emit(const GlobalOptions& g, const std::string& content) {
    if (g.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw Error(errc::parse_error, "cannot write '" + g.out + "'");
    file << content;
}

[[noreturn]] void reject_format(const GlobalOptions& g, const std::string& command) {
    throw Error(errc::parse_error, "--format " + g.format + " is not available for " + command);
}

/// Start state: the file's `initial`, location 0 at the all-zeros
/// corner when absent, optionally overridden per flag.
Configuration resolve_start(const TimedGameAutomaton& a, const std::string& location,
                            const std::vector<std::string>& clock_overrides) {
    Configuration start;
    if (a.initial()) {
        start = *a.initial();
    } else {
        start.location = 0;
        start.valuation.values.assign(static_cast<std::size_t>(a.num_clocks()), Rational(0));
    }
    if (!location.empty()) {
        const int id = a.location_index(location);
        if (id < 0) throw Error(errc::unknown_location, "unknown location '" + location + "'");
        start.location = id;
    }
    for (const std::string& assignment : clock_overrides) {
        const std::size_t eq = assignment.find('=');
        if (eq == std::string::npos)
            throw Error(errc::parse_error, "expected clock=value, got '" + assignment + "'");
        const std::string name = assignment.substr(0, eq);
        const int c = a.clock_index(name);
        if (c < 0) throw Error(errc::unknown_clock, "unknown clock '" + name + "'");
        start.valuation[c] = parse_rational(assignment.substr(eq + 1));
    }
    return start;
}

std::string solved_game_text(const SolvedGame& solved) {
    std::ostringstream out;
    out << "value " << solved.value().to_string() << " (" << solved.brg.num_vertices()
        << " vertices, " << solved.brg.num_edges() << " edges, scale " << solved.scale
        << (solved.verified ? ", verified" : "") << ")\n";
    return out.str();
}

std::string values_text(const std::vector<Rational>& values) {
    std::ostringstream out;
    out << "values:";
    for (const Rational& v : values) out << " " << v.to_string();
    out << "\n";
    return out.str();
}

int run_validate(const GlobalOptions& g, const std::string& input) {
    const TimedGameAutomaton a = parse_automaton(read_file(input));
    const ValidationReport report = validate(a);
    if (g.format == "json")
        emit(g, serialize_validation(report));
    else if (g.format == "text")
        emit(g, validation_to_text(report));
    else
        reject_format(g, "validate");
    return report.ok() ? 0 : 1;
}

int run_solve(const GlobalOptions& g, const std::string& input, const std::string& location,
              const std::vector<std::string>& clock_overrides, const std::string& strategy_of) {
    const TimedGameAutomaton a = parse_automaton(read_file(input));
    const Configuration start = resolve_start(a, location, clock_overrides);
    const SolvedGame solved = solve_average_time(a, start, g.cap);
    if (!strategy_of.empty()) {
        const Player player = strategy_of == "min" ? Player::Min : Player::Max;
        const BoundaryStrategy strategy = extract_boundary_strategy(a, solved, player);
        if (g.format == "json")
            emit(g, serialize_strategy(a, solved, strategy));
        else
            reject_format(g, "solve --strategy");
        return 0;
    }
    if (g.format == "json")
        emit(g, serialize_solved_game(a, solved));
    else if (g.format == "text")
        emit(g, solved_game_text(solved));
    else
        reject_format(g, "solve");
    return 0;
}

int run_brg(const GlobalOptions& g, const std::string& input, const std::string& location,
            const std::vector<std::string>& clock_overrides) {
    const TimedGameAutomaton a = parse_automaton(read_file(input));
    const Configuration start = resolve_start(a, location, clock_overrides);
    const BoundaryRegionGraph brg = explore(a, start, g.cap);
    if (g.format == "json")
        emit(g, brg_to_json(a, brg));
    else if (g.format == "dot")
        emit(g, brg_to_dot(a, brg));
    else
        emit(g, brg_to_text(a, brg));
    return 0;
}

int run_simulate(const GlobalOptions& g, const std::string& input, const std::string& location,
                 const std::vector<std::string>& clock_overrides, int steps,
                 const std::string& min_epsilon, const std::string& max_epsilon) {
    const TimedGameAutomaton a = parse_automaton(read_file(input));
    const Configuration start = resolve_start(a, location, clock_overrides);
    const SolvedGame solved = solve_average_time(a, start, g.cap);
    const BoundaryStrategy min_strategy = extract_boundary_strategy(a, solved, Player::Min);
    const BoundaryStrategy max_strategy = extract_boundary_strategy(a, solved, Player::Max);
    const SimPlayer min_player = min_epsilon.empty()
                                     ? pure(min_strategy)
                                     : epsilon_close(min_strategy, parse_rational(min_epsilon));
    const SimPlayer max_player = max_epsilon.empty()
                                     ? pure(max_strategy)
                                     : epsilon_close(max_strategy, parse_rational(max_epsilon));
    const SimTrace trace = simulate(a, start, steps, min_player, max_player);
    if (g.format == "json")
        emit(g, serialize_trace(a, trace));
    else if (g.format == "text")
        emit(g, trace_to_text(a, trace));
    else
        reject_format(g, "simulate");
    return 0;
}

int run_countdown_solve(const GlobalOptions& g, const std::string& input) {
    const CountdownGame game = parse_countdown(read_file(input));
    const CountdownSolution solution = dp_solve(game);
    if (g.format == "json") {
        emit(g, serialize_countdown_solution(game, solution));
    } else if (g.format == "text") {
        emit(g, std::string("player 1 ") + (solution.p1_wins ? "wins" : "loses") +
                    " with budget " + std::to_string(game.budget) + "\n");
    } else {
        reject_format(g, "countdown solve");
    }
    return 0;
}

int run_countdown_reduce(const GlobalOptions& g, const std::string& input, std::int64_t period) {
    const CountdownGame game = parse_countdown(read_file(input));
    const std::int64_t wait = period > 0 ? period : default_wait(game);
    if (g.format != "json") reject_format(g, "countdown reduce");
    emit(g, serialize_automaton(reduce(game, wait)));
    return 0;
}

int run_countdown_cross(const GlobalOptions& g, const std::string& input, std::int64_t period) {
    const CountdownGame game = parse_countdown(read_file(input));
    const std::int64_t wait = period > 0 ? period : default_wait(game);
    const CrossValidation result = cross_validate(game, wait, g.cap);
    if (g.format == "json") {
        emit(g, serialize_cross_validation(result));
    } else if (g.format == "text") {
        std::ostringstream out;
        out << "player 1 " << (result.p1_wins ? "wins" : "loses") << "; average-time value "
            << result.value.to_string() << (result.value_equals_wait ? " = " : " != ")
            << "slow-cycle period " << result.wait << " (" << result.vertices
            << " boundary states)\n";
        emit(g, out.str());
    } else {
        reject_format(g, "countdown cross-validate");
    }
    return 0;
}

MeanPayoffGame load_mpg(const GlobalOptions& g, const std::string& input, bool random) {
    if (random) return random_mpg(g.seed);
    if (input.empty()) throw Error(errc::parse_error, "mpg: need an input file or --random");
    return parse_mpg(read_file(input));
}

int run_mpg_solve(const GlobalOptions& g, const std::string& input, bool random) {
    const MeanPayoffGame game = load_mpg(g, input, random);
    const SolveResult result = solve(game);
    if (g.format == "json")
        emit(g, serialize_mpg_solution(result));
    else if (g.format == "text")
        emit(g, values_text(result.values));
    else
        reject_format(g, "mpg solve");
    return 0;
}

int run_mpg_brute(const GlobalOptions& g, const std::string& input, bool random) {
    const MeanPayoffGame game = load_mpg(g, input, random);
    const std::vector<Rational> values =
        brute_force_solve(game, static_cast<std::int64_t>(g.cap));
    if (g.format == "json")
        emit(g, serialize_mpg_values(values));
    else if (g.format == "text")
        emit(g, values_text(values));
    else
        reject_format(g, "mpg brute");
    return 0;
}

int run_mpg_verify(const GlobalOptions& g, const std::string& input, bool random) {
    const MeanPayoffGame game = load_mpg(g, input, random);
    const SolveResult result = solve(game);
    const std::vector<Rational> brute =
        brute_force_solve(game, static_cast<std::int64_t>(g.cap));
    const bool agree = result.values == brute;
    if (g.format == "json") {
        std::ostringstream out;
        out << "{\n  \"agree\": " << (agree ? "true" : "false") << ",\n  \"verified\": "
            << (result.verified ? "true" : "false") << "\n}\n";
        emit(g, out.str());
    } else if (g.format == "text") {
        emit(g, std::string(agree ? "solver agrees with brute force"
                                  : "MISMATCH between solver and brute force") +
                    "\n");
    } else {
        reject_format(g, "mpg verify");
    }
    return agree ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"average-time games on bounded timed automata"};
    app.require_subcommand(1);
    // Global flags may appear after the subcommand name.
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--cap", g.cap, "state / enumeration explosion guard")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for --random inputs")->capture_default_str();
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();

    std::string input, location, strategy_of, min_epsilon, max_epsilon;
    std::vector<std::string> clock_overrides;
    int steps = 20;
    std::int64_t period = 0;
    bool random = false;

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check automaton structure and availability");
    validate_cmd->add_option("input", input, "automaton JSON file")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "average-time value of the start state");
    solve_cmd->add_option("input", input, "automaton JSON file")->required();
    solve_cmd->add_option("--location", location, "override the start location");
    solve_cmd->add_option("--clock", clock_overrides, "override a start clock, clock=value");
    solve_cmd->add_option("--strategy", strategy_of, "emit one player's optimal strategy")
        ->check(CLI::IsMember({"min", "max"}));

    CLI::App* brg_cmd = app.add_subcommand("brg", "boundary region graph of the start state");
    brg_cmd->add_option("input", input, "automaton JSON file")->required();
    brg_cmd->add_option("--location", location, "override the start location");
    brg_cmd->add_option("--clock", clock_overrides, "override a start clock, clock=value");

    CLI::App* sim_cmd = app.add_subcommand("simulate", "play the optimal strategies");
    sim_cmd->add_option("input", input, "automaton JSON file")->required();
    sim_cmd->add_option("--location", location, "override the start location");
    sim_cmd->add_option("--clock", clock_overrides, "override a start clock, clock=value");
    sim_cmd->add_option("--steps", steps, "number of moves")->capture_default_str();
    sim_cmd->add_option("--min-epsilon", min_epsilon,
                        "perturb Min's delays into the open window by up to this");
    sim_cmd->add_option("--max-epsilon", max_epsilon,
                        "perturb Max's delays into the open window by up to this");

    CLI::App* countdown_cmd = app.add_subcommand("countdown", "countdown game tools");
    countdown_cmd->require_subcommand(1);
    CLI::App* cd_solve = countdown_cmd->add_subcommand("solve", "combinatorial winner");
    cd_solve->add_option("input", input, "countdown JSON file")->required();
    CLI::App* cd_reduce =
        countdown_cmd->add_subcommand("reduce", "emit the equivalent timed game");
    cd_reduce->add_option("input", input, "countdown JSON file")->required();
    cd_reduce->add_option("--period", period, "slow-cycle period (default: shortest duration)");
    CLI::App* cd_cross = countdown_cmd->add_subcommand(
        "cross-validate", "compare the combinatorial winner with the timed value");
    cd_cross->add_option("input", input, "countdown JSON file")->required();
    cd_cross->add_option("--period", period, "slow-cycle period (default: shortest duration)");

    CLI::App* mpg_cmd = app.add_subcommand("mpg", "mean-payoff game tools");
    mpg_cmd->require_subcommand(1);
    CLI::App* mpg_solve = mpg_cmd->add_subcommand("solve", "certified values and strategies");
    mpg_solve->add_option("input", input, "game JSON file");
    mpg_solve->add_flag("--random", random, "solve a generated game (see --seed)");
    CLI::App* mpg_brute = mpg_cmd->add_subcommand("brute", "strategy-enumeration values");
    mpg_brute->add_option("input", input, "game JSON file");
    mpg_brute->add_flag("--random", random, "use a generated game (see --seed)");
    CLI::App* mpg_verify =
        mpg_cmd->add_subcommand("verify", "check the solver against brute force");
    mpg_verify->add_option("input", input, "game JSON file");
    mpg_verify->add_flag("--random", random, "use a generated game (see --seed)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*validate_cmd) return run_validate(g, input);
        if (*solve_cmd) return run_solve(g, input, location, clock_overrides, strategy_of);
        if (*brg_cmd) return run_brg(g, input, location, clock_overrides);
        if (*sim_cmd) return run_simulate(g, input, location, clock_overrides, steps,
                                          min_epsilon, max_epsilon);
        if (*cd_solve) return run_countdown_solve(g, input);
        if (*cd_reduce) return run_countdown_reduce(g, input, period);
        if (*cd_cross) return run_countdown_cross(g, input, period);
        if (*mpg_solve) return run_mpg_solve(g, input, random);
        if (*mpg_brute) return run_mpg_brute(g, input, random);
        if (*mpg_verify) return run_mpg_verify(g, input, random);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
