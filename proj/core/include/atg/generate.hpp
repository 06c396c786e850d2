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

#ifndef ATG_GENERATE_HPP
#define ATG_GENERATE_HPP

#include <cstdint>

#include "atg/automaton.hpp"
#include "atg/countdown.hpp"
#include "atg/mpg.hpp"

namespace atg {

/// splitmix64. Identical sequences on every platform, unlike the
/// standard distributions.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);
    bool flip() { return next() >> 63; }

  private:
    std::uint64_t state_;
};

/// Small mean-payoff game: 2..6 vertices, at most 12 edges (at least
/// one per vertex), weights in 0..8. Self-loops and parallel edges
/// are allowed.
MeanPayoffGame random_mpg(std::uint64_t seed);

/// Small valid automaton: 1..2 clocks, bound 1..2, 2..4 locations with
/// S = true, one always-enabled resetting action keeping every region
/// live, plus 1..3 guarded actions. Initial state: location 0, all
/// clocks zero.
TimedGameAutomaton random_automaton(std::uint64_t seed);

/// Small countdown game: 2..4 nodes, 1..2 moves per node, durations
/// 1..4, budget 1..6.
CountdownGame random_countdown(std::uint64_t seed);

}  // namespace atg

#endif  // ATG_GENERATE_HPP
