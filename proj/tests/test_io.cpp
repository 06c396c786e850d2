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

#include <functional>
#include <string>
#include <vector>

#include "atg/brg.hpp"
#include "atg/io.hpp"
#include "atg/pipeline.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace atg;
using namespace atg::testing;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::overflow;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("rational literals") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("2x"), Error);
}

TEST_CASE("zone grammar") {
    const std::vector<std::string> cs{"x", "y"};

    const Zone z = parse_zone("x <= 2 && x - y < 1 && y = 0", cs);
    REQUIRE(z.conjuncts.size() == 3);
    CHECK(z.conjuncts[0].clock == 0);
    CHECK(z.conjuncts[0].op == RelOp::LE);
    CHECK(z.conjuncts[1].is_difference());
    CHECK(z.conjuncts[1].other == 1);
    CHECK(z.conjuncts[2].op == RelOp::EQ);

    CHECK(parse_zone("true", cs).is_always());
    CHECK(parse_zone("", cs).is_always());
    CHECK(parse_zone("false", cs).never);
    CHECK(parse_zone("x == 1", cs).conjuncts[0].op == RelOp::EQ);

    CHECK(code_of([&] { parse_zone("z < 1", cs); }) == errc::unknown_clock);
    CHECK(code_of([&] { parse_zone("x <", cs); }) == errc::parse_error);
    CHECK(code_of([&] { parse_zone("x < 1 garbage", cs); }) == errc::parse_error);
    CHECK(code_of([&] { parse_zone("x < -1", cs); }) == errc::parse_error);
    CHECK(code_of([&] { parse_zone("x ! 1", cs); }) == errc::parse_error);
}

TEST_CASE("zones print back to their grammar") {
    const std::vector<std::string> cs{"x", "y"};
    for (const std::string s :
         {"x<=2 && x-y<1", "y=0", "x>=1 && y>0", "true", "false", "x-y=0"}) {
        const Zone z = parse_zone(s, cs);
        const std::string printed = zone_to_string(z, cs);
        CHECK(zone_to_string(parse_zone(printed, cs), cs) == printed);
    }
    CHECK(zone_to_string(Zone::always(), cs) == "true");
    CHECK(zone_to_string(Zone::none(), cs) == "false");
    CHECK(zone_to_string(parse_zone("x-y<=0", cs), cs) == "x - y <= 0");
}

TEST_CASE("automaton files round-trip") {
    for (const std::string name : {"ex1.json", "ex2.json"}) {
        const std::string text = read_file(fixture(name));
        const TimedGameAutomaton a = parse_automaton(text);
        CHECK(validate(a).ok());
        const std::string once = serialize_automaton(a);
        CHECK(serialize_automaton(parse_automaton(once)) == once);
    }
}

TEST_CASE("parsed fixture matches the built-in example") {
    const TimedGameAutomaton parsed = parse_automaton(read_file(fixture("ex2.json")));
    CHECK(serialize_automaton(parsed) == serialize_automaton(handoff_automaton()));
}

TEST_CASE("absent enabled map means always enabled everywhere") {
    const TimedGameAutomaton a = parse_automaton(R"({
        "clocks": ["c"], "bound": 1,
        "locations": [{"name": "l", "owner": "min"}],
        "actions": [{"name": "a", "resets": ["c"], "delta": {"l": "l"}}]
    })");
    CHECK(a.action(0).enabled[0].is_always());

    const TimedGameAutomaton b = parse_automaton(R"({
        "clocks": ["c"], "bound": 1,
        "locations": [{"name": "l", "owner": "min"}, {"name": "m", "owner": "min"}],
        "actions": [{"name": "a", "resets": ["c"], "enabled": {"l": "c=1"},
                     "delta": {"l": "m"}}]
    })");
    CHECK_FALSE(b.action(0).enabled[0].never);
    CHECK(b.action(0).enabled[1].never);  // listed map, missing location
}

TEST_CASE("automaton schema errors") {
    CHECK(code_of([] { parse_automaton("not json"); }) == errc::parse_error);
    CHECK(code_of([] { parse_automaton("{}"); }) == errc::parse_error);
    CHECK(code_of([] {
              parse_automaton(R"({"clocks": ["c", "c"], "bound": 1,
                  "locations": [{"name": "l", "owner": "min"}], "actions": []})");
          }) == errc::invalid_automaton);
    CHECK(code_of([] {
              parse_automaton(R"({"clocks": ["c"], "bound": 0,
                  "locations": [{"name": "l", "owner": "min"}], "actions": []})");
          }) == errc::invalid_automaton);
    CHECK(code_of([] {
              parse_automaton(R"({"clocks": ["c"], "bound": 1,
                  "locations": [{"name": "l", "owner": "boss"}], "actions": []})");
          }) == errc::parse_error);
    // Initial valuations must cover every clock.
    CHECK(code_of([] {
              parse_automaton(R"({"clocks": ["c", "d"], "bound": 1,
                  "locations": [{"name": "l", "owner": "min"}], "actions": [],
                  "initial": {"location": "l", "valuation": {"c": "0"}}})");
          }) == errc::parse_error);
}

TEST_CASE("mean-payoff games round-trip") {
    MeanPayoffGame g({Player::Min, Player::Max},
                     {{0, 1, -2}, {1, 0, 4}, {1, 1, 7}});
    const std::string once = serialize_mpg(g);
    CHECK(serialize_mpg(parse_mpg(once)) == once);

    CHECK(code_of([] {
              parse_mpg(R"({"vertices": [{"id": 1, "owner": "min"}], "edges": []})");
          }) == errc::parse_error);
    CHECK(code_of([] {
              parse_mpg(R"({"vertices": [{"id": 0, "owner": "min"}],
                            "edges": [{"src": 0, "dst": 0, "weight": 10000000000000}]})");
          }) == errc::parse_error);
}

TEST_CASE("countdown files round-trip") {
    const std::string text = read_file(fixture("countdown_win.json"));
    const CountdownGame g = parse_countdown(text);
    CHECK(g.nodes.size() == 2);
    CHECK(g.budget == 4);
    const std::string once = serialize_countdown(g);
    CHECK(serialize_countdown(parse_countdown(once)) == once);

    const std::string sol = serialize_countdown_solution(g, dp_solve(g));
    CHECK(sol.find("\"p1_wins\": true") != std::string::npos);
}

TEST_CASE("boundary graph text rendering") {
    const TimedGameAutomaton ex1 = cycle_automaton();
    const BoundaryRegionGraph brg =
        explore(ex1, Configuration{0, vals({Rational(1, 2)})}, 100);
    const std::string expected =
        "2 vertices, 2 edges\n"
        "v0 [min] l (c=1/2) in c∈(0,1) | frac: {c}\n"
        "  --a, t=1/2 (wait c to 1, via c=1 | frac: -)--> v1\n"
        "v1 [min] l (c=0) in c=0 | frac: -\n"
        "  --a, t=1 (wait c to 1, via c=1 | frac: -)--> v1\n";
    CHECK(brg_to_text(ex1, brg) == expected);
}

TEST_CASE("boundary graph dot and json rendering") {
    const TimedGameAutomaton ex2 = handoff_automaton();
    const BoundaryRegionGraph brg = explore(ex2, Configuration{0, vals({Rational(0)})}, 100);

    const std::string dot = brg_to_dot(ex2, brg);
    CHECK(dot.rfind("digraph brg {", 0) == 0);
    CHECK(dot.find("box") != std::string::npos);      // Min shape
    CHECK(dot.find("ellipse") != std::string::npos);  // Max shape
    CHECK(dot.find("v0 -> v1") != std::string::npos);

    const std::string json = brg_to_json(ex2, brg);
    CHECK(json.find("\"initial\": 0") != std::string::npos);
    CHECK(json.find("\"edges\"") != std::string::npos);
    CHECK(json.back() == '\n');
}

TEST_CASE("solved games and strategies serialize with their context") {
    const TimedGameAutomaton ex2 = handoff_automaton();
    const SolvedGame solved =
        solve_average_time(ex2, Configuration{0, vals({Rational(0)})}, 100);

    const std::string sg = serialize_solved_game(ex2, solved);
    CHECK(sg.find("\"value\": \"1\"") != std::string::npos);
    CHECK(sg.find("\"verified\": true") != std::string::npos);
    CHECK(sg.find("\"location\": \"lmin\"") != std::string::npos);

    const BoundaryStrategy max_s = extract_boundary_strategy(ex2, solved, Player::Max);
    const std::string st = serialize_strategy(ex2, solved, max_s);
    CHECK(st.find("\"player\": \"max\"") != std::string::npos);
    CHECK(st.find("\"region_uniform\": true") != std::string::npos);
    CHECK(st.find("\"action\": \"b\"") != std::string::npos);
}

TEST_CASE("traces serialize and pretty-print") {
    const TimedGameAutomaton ex2 = handoff_automaton();
    const Configuration start{0, vals({Rational(0)})};
    const SolvedGame solved = solve_average_time(ex2, start, 100);
    const BoundaryStrategy min_s = extract_boundary_strategy(ex2, solved, Player::Min);
    const BoundaryStrategy max_s = extract_boundary_strategy(ex2, solved, Player::Max);
    const SimTrace trace = simulate(ex2, start, 4, pure(min_s), pure(max_s));

    const std::string json = serialize_trace(ex2, trace);
    CHECK(json.find("\"total\": \"4\"") != std::string::npos);
    CHECK(json.find("\"average\": \"1\"") != std::string::npos);

    const std::string text = trace_to_text(ex2, trace);
    CHECK(text.find("start lmin") != std::string::npos);
    CHECK(text.find("wait 2, fire b") != std::string::npos);
    CHECK(text.find("total 4 over 4 steps, average 1") != std::string::npos);
}

TEST_CASE("validation reports in both formats") {
    const TimedGameAutomaton ok = cycle_automaton();
    CHECK(validation_to_text(validate(ok)) == "valid\n");
    CHECK(serialize_validation(validate(ok)).find("\"valid\": true") != std::string::npos);

    TimedGameAutomaton bad = cycle_automaton();
    ActionDef orphan;
    orphan.name = "x";
    orphan.resets = {false};
    orphan.enabled = {Zone::always()};
    orphan.target = {-1};
    bad = TimedGameAutomaton({"c"}, 1, {"l"}, {Player::Min}, {Zone::always()},
                             {ok.action(0), orphan},
                             Configuration{0, vals({Rational(0)})});
    const ValidationReport report = validate(bad);
    CHECK_FALSE(report.ok());
    CHECK(validation_to_text(report).find("delta:") != std::string::npos);
    CHECK(serialize_validation(report).find("\"valid\": false") != std::string::npos);
}

TEST_CASE("missing files raise input errors") {
    CHECK(code_of([] { read_file("/nonexistent/path.json"); }) == errc::parse_error);
}

}  // TEST_SUITE
