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

#include <set>
#include <vector>

#include "atg/region.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace atg;
using namespace atg::testing;

TEST_SUITE("region") {

TEST_CASE("region_of classifies integer parts and fraction order") {
    const ClockRegion r = region_of(vals({Rational(1), Rational(1, 3), Rational(2, 3)}));
    CHECK(r.int_part == std::vector<int>{1, 0, 0});
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0] == std::vector<ClockId>{0});
    CHECK(r.classes[1] == std::vector<ClockId>{1});
    CHECK(r.classes[2] == std::vector<ClockId>{2});
    CHECK(r.class_of(0) == 0);
    CHECK(r.class_of(2) == 2);

    const ClockRegion tied = region_of(vals({Rational(1, 2), Rational(3, 2)}));
    REQUIRE(tied.classes.size() == 2);
    CHECK(tied.classes[0].empty());
    CHECK(tied.classes[1] == std::vector<ClockId>{0, 1});
}

TEST_CASE("membership in the region and its closure") {
    const ClockRegion r = region_of(vals({Rational(1, 3), Rational(2, 3)}));
    CHECK(in_region(vals({Rational(1, 4), Rational(1, 2)}), r));
    CHECK_FALSE(in_region(vals({Rational(1, 2), Rational(1, 4)}), r));
    CHECK_FALSE(in_region(vals({Rational(0), Rational(1, 2)}), r));
    // Closure: order relaxed to non-strict, endpoints allowed.
    CHECK(in_closure(vals({Rational(0), Rational(1, 2)}), r));
    CHECK(in_closure(vals({Rational(1, 2), Rational(1, 2)}), r));
    CHECK(in_closure(vals({Rational(1), Rational(1)}), r));
    CHECK_FALSE(in_closure(vals({Rational(1, 2), Rational(1, 4)}), r));
}

TEST_CASE("thinness") {
    CHECK(is_thin(region_of(vals({Rational(1)}))));
    CHECK(is_thin(region_of(vals({Rational(0), Rational(1, 2)}))));
    CHECK_FALSE(is_thin(region_of(vals({Rational(1, 2)}))));
}

TEST_CASE("time successor walks the elapse chain") {
    const int bound = 1;
    ClockRegion r = region_of(vals({Rational(0)}));
    auto s1 = time_successor(r, bound);
    REQUIRE(s1);
    CHECK(*s1 == region_of(vals({Rational(1, 2)})));
    auto s2 = time_successor(*s1, bound);
    REQUIRE(s2);
    CHECK(*s2 == region_of(vals({Rational(1)})));
    CHECK_FALSE(time_successor(*s2, bound));
}

TEST_CASE("time successor interleaves fraction classes") {
    // (0.5, 0.75): the larger fraction reaches its integer first.
    const ClockRegion r = region_of(vals({Rational(1, 2), Rational(3, 4)}));
    auto s = time_successor(r, 2);
    REQUIRE(s);
    CHECK(*s == region_of(vals({Rational(3, 4), Rational(1)})));
}

TEST_CASE("reset maps onto the zero class") {
    const ClockRegion r = region_of(vals({Rational(1, 2), Rational(3, 2)}));
    const ClockRegion reset = reset_region(r, {true, false});
    CHECK(reset == region_of(vals({Rational(0), Rational(3, 2)})));
}

TEST_CASE("zone_test agrees with pointwise evaluation on samples") {
    const TimedGameAutomaton a = handoff_automaton();  // one clock, bound 2
    const Zone z{false, {{0, -1, RelOp::LE, 1}}};
    CHECK(zone_test(a, region_of(vals({Rational(1, 2)})), z));
    CHECK(zone_test(a, region_of(vals({Rational(1)})), z));
    CHECK_FALSE(zone_test(a, region_of(vals({Rational(3, 2)})), z));
    const Zone eq{false, {{0, -1, RelOp::EQ, 1}}};
    CHECK(zone_test(a, region_of(vals({Rational(1)})), eq));
    CHECK_FALSE(zone_test(a, region_of(vals({Rational(1, 2)})), eq));
}

TEST_CASE("difference constraints are region-constant too") {
    const TimedGameAutomaton a({"x", "y"}, 2, {"l"}, {Player::Min},
                               {Zone::always()},
                               {ActionDef{"a",
                                          {true, true},
                                          {Zone::always()},
                                          {0}}},
                               std::nullopt);
    const Zone diff{false, {{0, 1, RelOp::LE, 0}}};  // x - y <= 0
    CHECK(zone_test(a, region_of(vals({Rational(1, 4), Rational(1, 2)})), diff));
    CHECK(zone_test(a, region_of(vals({Rational(1, 2), Rational(1, 2)})), diff));
    CHECK_FALSE(zone_test(a, region_of(vals({Rational(3, 4), Rational(1, 2)})), diff));
    CHECK_FALSE(zone_test(a, region_of(vals({Rational(5, 4), Rational(1, 2)})), diff));
}

TEST_CASE("future chain of the cycle automaton") {
    const TimedGameAutomaton a = cycle_automaton();
    const auto chain = future_chain(a, Region{0, region_of(vals({Rational(0)}))});
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == region_of(vals({Rational(0)})));
    CHECK(chain[1] == region_of(vals({Rational(1, 2)})));
    CHECK(chain[2] == region_of(vals({Rational(1)})));
}

TEST_CASE("future chain stops when S does") {
    ActionDef act;
    act.name = "a";
    act.resets = {true};
    act.enabled = {Zone::always()};
    act.target = {0};
    const Zone s{false, {{0, -1, RelOp::LE, 0}}};
    const TimedGameAutomaton a({"c"}, 1, {"l"}, {Player::Min}, {s}, {act}, std::nullopt);
    const auto chain = future_chain(a, Region{0, region_of(vals({Rational(0)}))});
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == region_of(vals({Rational(0)})));
}

TEST_CASE("action successor fires region-wide or not at all") {
    const TimedGameAutomaton a = cycle_automaton();
    const auto hit = action_successor(a, Region{0, region_of(vals({Rational(1)}))}, 0);
    REQUIRE(hit);
    CHECK(hit->location == 0);
    CHECK(hit->clocks == region_of(vals({Rational(0)})));
    CHECK_FALSE(action_successor(a, Region{0, region_of(vals({Rational(1, 2)}))}, 0));
}

TEST_CASE("region counts match the combinatorial oracle") {
    CHECK(enumerate_regions(1, 1).size() == 3);
    CHECK(enumerate_regions(1, 2).size() == 5);
    CHECK(enumerate_regions(2, 1).size() == 11);
}

TEST_CASE("a dense valuation grid hits every enumerated region exactly") {
    // Denominator-4 grid over [0, 1]^2: fine enough to reach all 11
    // regions of two clocks at bound 1.
    std::set<ClockRegion> seen;
    for (int x = 0; x <= 4; ++x)
        for (int y = 0; y <= 4; ++y)
            seen.insert(region_of(vals({Rational(x, 4), Rational(y, 4)})));
    const auto all = enumerate_regions(2, 1);
    CHECK(seen.size() == all.size());
    for (const auto& r : all) CHECK(seen.count(r) == 1);
}

TEST_CASE("rendering regions") {
    const TimedGameAutomaton a = handoff_automaton();
    CHECK(to_string(a, region_of(vals({Rational(1)}))) == "c=1 | frac: -");
    CHECK(to_string(a, region_of(vals({Rational(1, 2)}))) == "c∈(0,1) | frac: {c}");
    CHECK(to_string(a, Region{1, region_of(vals({Rational(0)}))}) == "lmax | c=0 | frac: -");
}

}  // TEST_SUITE
