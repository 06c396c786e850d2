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

#ifndef ATG_REGION_HPP
#define ATG_REGION_HPP

#include <optional>
#include <string>
#include <vector>

#include "atg/automaton.hpp"

namespace atg {

/// Canonical clock region: integer parts plus the ordered partition of clocks
/// by fractional part. classes[0] is the zero-fraction class X0 (may be
/// empty); classes[1..] are nonempty with strictly increasing fractions.
/// Any clock whose value is exactly the bound k sits in X0 with int_part = k.
struct ClockRegion {
    std::vector<int> int_part;
    std::vector<std::vector<ClockId>> classes;

    bool operator==(const ClockRegion& o) const {
        return int_part == o.int_part && classes == o.classes;
    }
    bool operator!=(const ClockRegion& o) const { return !(*this == o); }
    bool operator<(const ClockRegion& o) const {
        if (int_part != o.int_part) return int_part < o.int_part;
        return classes < o.classes;
    }

    /// Index of the fraction class containing c (0 = X0).
    int class_of(ClockId c) const;
};

/// Location-paired region.
struct Region {
    LocationId location = 0;
    ClockRegion clocks;

    bool operator==(const Region& o) const {
        return location == o.location && clocks == o.clocks;
    }
    bool operator<(const Region& o) const {
        if (location != o.location) return location < o.location;
        return clocks < o.clocks;
    }
};

/// The region containing an exact valuation.
ClockRegion region_of(const ClockValuation& v);

bool in_region(const ClockValuation& v, const ClockRegion& r);

/// Membership in the topological closure: zero-fraction clocks pinned to
/// their integer, others within [int_part, int_part + 1], class equalities
/// kept and the cross-class fraction order relaxed to non-strict.
bool in_closure(const ClockValuation& v, const ClockRegion& r);

/// Thin iff X0 is nonempty (time cannot elapse without changing region).
bool is_thin(const ClockRegion& r);

/// Immediate successor region under time elapse; absent iff some clock is
/// exactly at the bound.
std::optional<ClockRegion> time_successor(const ClockRegion& r, int bound);

/// Region image under clock resets: reset clocks drop to integer 0.
ClockRegion reset_region(const ClockRegion& r, const std::vector<bool>& resets);

/// Whole-region satisfaction of a zone. Regions are uniform for every
/// constraint of the grammar, so this is also pointwise satisfaction.
bool zone_test(const TimedGameAutomaton& a, const ClockRegion& r, const Zone& z);

/// Maximal time-elapse chain R = R0, R1, ... with every region inside S at
/// the given location. Empty if R itself leaves S.
std::vector<ClockRegion> future_chain(const TimedGameAutomaton& a, const Region& r);

/// The region move for action `act` fired anywhere in r: defined iff r lies
/// in E(act) and S, the target location exists and the reset image lies in S.
std::optional<Region> action_successor(const TimedGameAutomaton& a, const Region& r,
                                       ActionId act);

/// All canonical regions over the given number of clocks and bound.
/// Intended for small clock counts (validation and tests).
std::vector<ClockRegion> enumerate_regions(int num_clocks, int bound);

/// Render as `c1=1, c2∈(0,1) | frac: {c2}`; with the location:
/// `loc | c1=1, c2∈(0,1) | frac: {c2}`.
std::string to_string(const TimedGameAutomaton& a, const ClockRegion& r);
std::string to_string(const TimedGameAutomaton& a, const Region& r);

} // namespace atg

#endif
