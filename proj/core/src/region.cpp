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

#include "atg/region.hpp"

#include <algorithm>
#include <map>

namespace atg {

int ClockRegion::class_of(ClockId c) const {
    for (int i = 0; i < (int)classes.size(); ++i)
        for (ClockId x : classes[i])
            if (x == c) return i;
    return -1;
}

ClockRegion region_of(const ClockValuation& v) {
    ClockRegion r;
    r.int_part.resize(v.size());
    std::map<Rational, std::vector<ClockId>> by_frac;
    for (int c = 0; c < v.size(); ++c) {
        r.int_part[c] = (int)v[c].floor();
        by_frac[v[c].frac()].push_back(c);
    }
    r.classes.emplace_back(); // X0
    for (auto& [f, clocks] : by_frac) {
        if (f == Rational(0))
            r.classes[0] = clocks;
        else
            r.classes.push_back(clocks);
    }
    return r;
}

bool in_region(const ClockValuation& v, const ClockRegion& r) {
    return region_of(v) == r;
}

bool in_closure(const ClockValuation& v, const ClockRegion& r) {
    int n = (int)r.int_part.size();
    if (v.size() != n) return false;
    // g(c) = v(c) - int_part(c), the relative offset within the unit cell.
    std::vector<Rational> g(n);
    for (int c = 0; c < n; ++c) g[c] = v[c] - Rational(r.int_part[c]);
    for (ClockId c : r.classes[0])
        if (g[c] != Rational(0)) return false;
    Rational prev(0);
    for (int i = 1; i < (int)r.classes.size(); ++i) {
        Rational gi = g[r.classes[i][0]];
        for (ClockId c : r.classes[i])
            if (g[c] != gi) return false;
        if (gi < prev || gi < Rational(0) || gi > Rational(1)) return false;
        prev = gi;
    }
    return true;
}

bool is_thin(const ClockRegion& r) { return !r.classes[0].empty(); }

std::optional<ClockRegion> time_successor(const ClockRegion& r, int bound) {
    for (ClockId c : r.classes[0])
        if (r.int_part[c] == bound) return std::nullopt;
    ClockRegion out = r;
    if (is_thin(r)) {
        // X0 picks up an infinitesimal positive fraction, below every other class.
        out.classes.insert(out.classes.begin() + 1, r.classes[0]);
        out.classes[0].clear();
    } else {
        // The highest fractions reach the next integer together.
        std::vector<ClockId> top = out.classes.back();
        out.classes.pop_back();
        for (ClockId c : top) out.int_part[c] += 1;
        out.classes[0] = top;
    }
    return out;
}

ClockRegion reset_region(const ClockRegion& r, const std::vector<bool>& resets) {
    ClockRegion out;
    out.int_part = r.int_part;
    out.classes.emplace_back();
    for (int i = 0; i < (int)r.classes.size(); ++i) {
        std::vector<ClockId> kept;
        for (ClockId c : r.classes[i]) {
            if (resets[c]) {
                out.int_part[c] = 0;
                out.classes[0].push_back(c);
            } else if (i == 0) {
                out.classes[0].push_back(c);
            } else {
                kept.push_back(c);
            }
        }
        if (i > 0 && !kept.empty()) out.classes.push_back(kept);
    }
    std::sort(out.classes[0].begin(), out.classes[0].end());
    return out;
}

namespace {

// Exact value set of a clock (or clock difference) over a region: either a
// single integer or the open unit interval (lo, lo + 1).
struct RegionInterval {
    bool exact;
    int lo;
};

RegionInterval clock_range(const ClockRegion& r, ClockId c) {
    if (r.class_of(c) == 0) return {true, r.int_part[c]};
    return {false, r.int_part[c]};
}

RegionInterval difference_range(const ClockRegion& r, ClockId c, ClockId o) {
    int d = r.int_part[c] - r.int_part[o];
    int ic = r.class_of(c), io = r.class_of(o);
    if (ic == io) return {true, d};
    if (ic > io) return {false, d};
    return {false, d - 1};
}

bool interval_satisfies(RegionInterval iv, RelOp op, int n) {
    if (iv.exact) {
        switch (op) {
        case RelOp::LT: return iv.lo < n;
        case RelOp::LE: return iv.lo <= n;
        case RelOp::EQ: return iv.lo == n;
        case RelOp::GE: return iv.lo >= n;
        case RelOp::GT: return iv.lo > n;
        }
        return false;
    }
    // Open interval (lo, lo + 1) with integer endpoints.
    switch (op) {
    case RelOp::LT: return iv.lo + 1 <= n;
    case RelOp::LE: return iv.lo + 1 <= n;
    case RelOp::EQ: return false;
    case RelOp::GE: return iv.lo >= n;
    case RelOp::GT: return iv.lo >= n;
    }
    return false;
}

} // namespace

bool zone_test(const TimedGameAutomaton& a, const ClockRegion& r, const Zone& z) {
    if (z.never) return false;
    for (const auto& c : z.conjuncts) {
        if (c.clock < 0 || c.clock >= a.num_clocks() ||
            (c.is_difference() && c.other >= a.num_clocks()))
            throw Error(errc::unknown_clock, "constraint references an unknown clock");
        RegionInterval iv = c.is_difference() ? difference_range(r, c.clock, c.other)
                                              : clock_range(r, c.clock);
        if (!interval_satisfies(iv, c.op, c.bound)) return false;
    }
    return true;
}

std::vector<ClockRegion> future_chain(const TimedGameAutomaton& a, const Region& r) {
    std::vector<ClockRegion> chain;
    const Zone& s = a.state_zone(r.location);
    ClockRegion cur = r.clocks;
    while (zone_test(a, cur, s)) {
        chain.push_back(cur);
        auto next = time_successor(cur, a.bound());
        if (!next) break;
        cur = *next;
    }
    return chain;
}

std::optional<Region> action_successor(const TimedGameAutomaton& a, const Region& r,
                                       ActionId act) {
    const ActionDef& def = a.action(act);
    if (def.target[r.location] < 0) return std::nullopt;
    if (!zone_test(a, r.clocks, a.state_zone(r.location))) return std::nullopt;
    if (!zone_test(a, r.clocks, def.enabled[r.location])) return std::nullopt;
    Region out{def.target[r.location], reset_region(r.clocks, def.resets)};
    if (!zone_test(a, out.clocks, a.state_zone(out.location))) return std::nullopt;
    return out;
}

namespace {

void ordered_partitions(std::vector<ClockId> rest, std::vector<std::vector<ClockId>>& current,
                        std::vector<std::vector<std::vector<ClockId>>>& out) {
    if (rest.empty()) {
        out.push_back(current);
        return;
    }
    // Any nonempty subset may form the next (lowest-fraction) class.
    int m = (int)rest.size();
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<ClockId> cls;
        std::vector<ClockId> remaining;
        for (int i = 0; i < m; ++i)
            (mask & (1 << i)) ? cls.push_back(rest[i]) : remaining.push_back(rest[i]);
        current.push_back(cls);
        ordered_partitions(remaining, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<ClockRegion> enumerate_regions(int num_clocks, int bound) {
    std::vector<ClockRegion> out;
    std::vector<int> ints(num_clocks, 0);
    while (true) {
        // Clocks at the bound carry no fraction; the rest choose freely.
        std::vector<ClockId> pinned, free;
        for (int c = 0; c < num_clocks; ++c)
            (ints[c] == bound ? pinned : free).push_back(c);
        int m = (int)free.size();
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<ClockId> zero = pinned;
            std::vector<ClockId> fractional;
            for (int i = 0; i < m; ++i)
                (mask & (1 << i)) ? zero.push_back(free[i]) : fractional.push_back(free[i]);
            std::sort(zero.begin(), zero.end());
            std::vector<std::vector<std::vector<ClockId>>> parts;
            std::vector<std::vector<ClockId>> scratch;
            ordered_partitions(fractional, scratch, parts);
            for (auto& p : parts) {
                ClockRegion r;
                r.int_part = ints;
                r.classes.push_back(zero);
                for (auto& cls : p) r.classes.push_back(cls);
                out.push_back(std::move(r));
            }
        }
        int c = 0;
        while (c < num_clocks && ints[c] == bound) ints[c++] = 0;
        if (c == num_clocks) break;
        ints[c] += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const TimedGameAutomaton& a, const ClockRegion& r) {
    std::string s;
    for (int c = 0; c < (int)r.int_part.size(); ++c) {
        if (c) s += ", ";
        if (r.class_of(c) == 0)
            s += a.clock_name(c) + "=" + std::to_string(r.int_part[c]);
        else
            s += a.clock_name(c) + "∈(" + std::to_string(r.int_part[c]) + "," +
                 std::to_string(r.int_part[c] + 1) + ")";
    }
    s += " | frac: ";
    if (r.classes.size() == 1) {
        s += "-";
    } else {
        for (int i = 1; i < (int)r.classes.size(); ++i) {
            if (i > 1) s += " < ";
            s += "{";
            for (int j = 0; j < (int)r.classes[i].size(); ++j) {
                if (j) s += ",";
                s += a.clock_name(r.classes[i][j]);
            }
            s += "}";
        }
    }
    return s;
}

std::string to_string(const TimedGameAutomaton& a, const Region& r) {
    return a.location_name(r.location) + " | " + to_string(a, r.clocks);
}

} // namespace atg
