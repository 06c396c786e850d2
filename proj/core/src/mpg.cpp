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

#include "atg/mpg.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace atg {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

MeanPayoffGame::MeanPayoffGame(std::vector<Player> owners, std::vector<MpgEdge> edges)
    : owners_(std::move(owners)), edges_(std::move(edges)) {
    const int n = num_vertices();
    if (n == 0) throw Error(errc::invalid_game, "mean-payoff game has no vertices");
    out_.assign(uz(n), {});
    for (int e = 0; e < num_edges(); ++e) {
        const MpgEdge& ed = edges_[uz(e)];
        if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
            throw Error(errc::invalid_game,
                        "edge " + std::to_string(e) + " endpoint out of range");
        out_[uz(ed.src)].push_back(e);
    }
    for (int v = 0; v < n; ++v)
        if (out_[uz(v)].empty())
            throw Error(errc::invalid_game,
                        "vertex " + std::to_string(v) + " has no outgoing edge");
}

std::int64_t MeanPayoffGame::weight_scale() const {
    std::int64_t w = 1;
    for (const MpgEdge& e : edges_) w = std::max(w, std::abs(e.weight));
    return w;
}

std::vector<std::int64_t> value_iteration(const MeanPayoffGame& game, std::int64_t steps) {
    const int n = game.num_vertices();
    if (steps < 0) throw Error(errc::invalid_game, "negative horizon");
    const std::int64_t w = game.weight_scale();
    if (static_cast<__int128>(steps) * w > (std::numeric_limits<std::int64_t>::max() / 4))
        throw Error(errc::overflow, "value iteration horizon overflows 64-bit weights");
    std::vector<std::int64_t> cur(uz(n), 0), next(uz(n), 0);
    for (std::int64_t t = 0; t < steps; ++t) {
        for (int v = 0; v < n; ++v) {
            bool first = true;
            std::int64_t best = 0;
            for (int e : game.out(v)) {
                const MpgEdge& ed = game.edge(e);
                const std::int64_t cand = ed.weight + cur[uz(ed.dst)];
                if (first) {
                    best = cand;
                    first = false;
                } else if (game.owner(v) == Player::Min ? cand < best : cand > best) {
                    best = cand;
                }
            }
            next[uz(v)] = best;
        }
        cur.swap(next);
    }
    return cur;
}

Rational round_to_cycle_mean(const Rational& x, std::int64_t max_den) {
    if (max_den < 1) throw Error(errc::invalid_game, "denominator bound must be positive");
    if (x.den <= max_den) return x;
    // Continued fraction walk; the best approximation with bounded
    // denominator is the last convergent that fits or a semiconvergent
    // of the following level. Compare the two exactly.
    std::int64_t p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
    std::int64_t p1 = 0, q1 = 1;  // will become h_0/k_0 after first step
    std::int64_t num = x.num, den = x.den;
    bool have = false;
    while (true) {
        // floor division that is exact for negatives
        std::int64_t a = num / den;
        if ((num % den) != 0 && ((num < 0) != (den < 0))) --a;
        const __int128 np128 = static_cast<__int128>(a) * (have ? p1 : 1) + (have ? p0 : 0);
        const __int128 nq128 = static_cast<__int128>(a) * (have ? q1 : 0) + (have ? q0 : 1);
        if (np128 > std::numeric_limits<std::int64_t>::max() ||
            np128 < std::numeric_limits<std::int64_t>::min() ||
            nq128 > std::numeric_limits<std::int64_t>::max())
            throw Error(errc::overflow, "convergent overflows 64 bits");
        const std::int64_t np = static_cast<std::int64_t>(np128);
        const std::int64_t nq = static_cast<std::int64_t>(nq128);
        if (!have) {
            p0 = 1;
            q0 = 0;
            p1 = np;
            q1 = nq;
            have = true;
        } else if (nq > max_den) {
            // Largest semiconvergent with denominator within bound.
            const std::int64_t t = (max_den - q0) / q1;
            Rational best(p1, q1);
            if (t >= 1) {
                const Rational semi(t * p1 + p0, t * q1 + q0);
                const Rational d_best = abs(x - best);
                const Rational d_semi = abs(x - semi);
                if (d_semi == d_best)
                    throw Error(errc::ambiguous_rounding,
                                "two rationals with denominator <= " + std::to_string(max_den) +
                                    " are equally close to " + x.to_string());
                if (d_semi < d_best) best = semi;
            }
            return best;
        } else {
            p0 = p1;
            q0 = q1;
            p1 = np;
            q1 = nq;
        }
        const std::int64_t rem = num - a * den;
        if (rem == 0) return Rational(p1, q1);  // exact; q1 <= max_den here
        num = den;
        den = rem;
    }
}

namespace {

/// Outgoing edge ids of v under an optional one-player restriction.
class RestrictedView {
public:
    RestrictedView(const MeanPayoffGame& game, const PositionalStrategy* fixed,
                   std::optional<Player> fixed_player)
        : game_(game), fixed_(fixed), player_(fixed_player) {
        if ((fixed == nullptr) != !fixed_player.has_value())
            throw Error(errc::invalid_game, "strategy and player must be given together");
        if (fixed != nullptr) {
            if (static_cast<int>(fixed->size()) != game.num_vertices())
                throw Error(errc::invalid_game, "strategy size mismatch");
            for (int v = 0; v < game.num_vertices(); ++v) {
                if (game.owner(v) != *fixed_player) continue;
                const int e = (*fixed)[uz(v)];
                if (e < 0 || e >= game.num_edges() || game.edge(e).src != v)
                    throw Error(errc::invalid_game,
                                "strategy picks a foreign edge at vertex " + std::to_string(v));
            }
        }
    }

    template <typename F>
    void for_each_edge(int v, F&& f) const {
        if (fixed_ != nullptr && game_.owner(v) == *player_) {
            f((*fixed_)[uz(v)]);
        } else {
            for (int e : game_.out(v)) f(e);
        }
    }

private:
    const MeanPayoffGame& game_;
    const PositionalStrategy* fixed_;
    std::optional<Player> player_;
};

struct SccResult {
    std::vector<int> comp;             // vertex -> component id, in pop order
    std::vector<std::vector<int>> members;  // component id -> vertices
};

/// Iterative Tarjan. Components come out in reverse topological order
/// of the condensation: every edge leaving a component points at a
/// component with a smaller id... it points at an already-popped one,
/// which has a SMALLER id, so successors precede their predecessors.
SccResult strongly_connected_components(const MeanPayoffGame& game, const RestrictedView& view) {
    const int n = game.num_vertices();
    SccResult result;
    result.comp.assign(uz(n), -1);
    std::vector<int> index(uz(n), -1), low(uz(n), 0);
    std::vector<bool> on_stack(uz(n), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
        std::vector<int> succ;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[uz(root)] != -1) continue;
        frames.push_back({root, 0, {}});
        while (!frames.empty()) {
            Frame& fr = frames.back();
            if (fr.child == 0) {
                index[uz(fr.v)] = low[uz(fr.v)] = next_index++;
                stack.push_back(fr.v);
                on_stack[uz(fr.v)] = true;
                view.for_each_edge(fr.v, [&](int e) { fr.succ.push_back(game.edge(e).dst); });
            }
            if (fr.child < fr.succ.size()) {
                const int w = fr.succ[fr.child++];
                if (index[uz(w)] == -1) {
                    frames.push_back({w, 0, {}});
                } else if (on_stack[uz(w)]) {
                    low[uz(fr.v)] = std::min(low[uz(fr.v)], index[uz(w)]);
                }
                continue;
            }
            if (low[uz(fr.v)] == index[uz(fr.v)]) {
                const int id = static_cast<int>(result.members.size());
                result.members.emplace_back();
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[uz(w)] = false;
                    result.comp[uz(w)] = id;
                    result.members.back().push_back(w);
                } while (w != fr.v);
            }
            const int v = fr.v;
            frames.pop_back();
            if (!frames.empty())
                low[uz(frames.back().v)] = std::min(low[uz(frames.back().v)], low[uz(v)]);
        }
    }
    return result;
}

/// Optimal cycle mean inside one strongly connected component with at
/// least one internal edge. D_k(v) = best weight over walks of length
/// exactly k ending at v, starting anywhere in the component (D_0 = 0
/// everywhere, so every entry stays finite). The answer is
///   opt_v pess_k (D_n(v) - D_k(v)) / (n - k),  0 <= k < n,
/// opt/pess = max/min for a Max objective and min/max for Min.
Rational component_cycle_mean(const std::vector<int>& members,
                              const std::vector<std::array<std::int64_t, 3>>& internal_edges,
                              Player objective) {
    const int ns = static_cast<int>(members.size());
    const bool maximize = objective == Player::Max;
    std::vector<std::int64_t> cur(uz(ns), 0), next(uz(ns), 0);
    const std::int64_t flat = maximize ? std::numeric_limits<std::int64_t>::min()
                                       : std::numeric_limits<std::int64_t>::max();
    auto relax = [&](std::vector<std::int64_t>& dst, const std::vector<std::int64_t>& src) {
        std::fill(dst.begin(), dst.end(), flat);
        for (const auto& ed : internal_edges) {
            const std::int64_t cand = src[uz(static_cast<int>(ed[0]))] + ed[2];
            std::int64_t& slot = dst[uz(static_cast<int>(ed[1]))];
            if (maximize ? cand > slot : cand < slot) slot = cand;
        }
    };

    std::vector<std::int64_t> final_row;
    for (int k = 0; k < ns; ++k) {
        relax(next, cur);
        cur.swap(next);
    }
    final_row = cur;

    std::vector<Rational> pess(uz(ns));
    std::vector<bool> seeded(uz(ns), false);
    std::fill(cur.begin(), cur.end(), 0);
    for (int k = 0; k < ns; ++k) {
        for (int li = 0; li < ns; ++li) {
            const Rational ratio(final_row[uz(li)] - cur[uz(li)], ns - k);
            if (!seeded[uz(li)]) {
                pess[uz(li)] = ratio;
                seeded[uz(li)] = true;
            } else if (maximize ? ratio < pess[uz(li)] : ratio > pess[uz(li)]) {
                pess[uz(li)] = ratio;
            }
        }
        if (k + 1 < ns) {
            relax(next, cur);
            cur.swap(next);
        }
    }

    Rational best = pess[0];
    for (int li = 1; li < ns; ++li)
        if (maximize ? pess[uz(li)] > best : pess[uz(li)] < best) best = pess[uz(li)];
    return best;
}

}  // namespace

std::vector<Rational> karp_mean_cycle(const MeanPayoffGame& game, Player objective,
                                      const PositionalStrategy* fixed,
                                      std::optional<Player> fixed_player) {
    const RestrictedView view(game, fixed, fixed_player);
    const SccResult scc = strongly_connected_components(game, view);
    const int ncomp = static_cast<int>(scc.members.size());
    const bool maximize = objective == Player::Max;

    // Internal edges per component, with component-local endpoints.
    std::vector<int> local(uz(game.num_vertices()), -1);
    for (int c = 0; c < ncomp; ++c)
        for (std::size_t i = 0; i < scc.members[uz(c)].size(); ++i)
            local[uz(scc.members[uz(c)][i])] = static_cast<int>(i);
    std::vector<std::vector<std::array<std::int64_t, 3>>> internal(uz(ncomp));
    std::vector<std::vector<int>> crossing(uz(ncomp));
    for (int v = 0; v < game.num_vertices(); ++v) {
        view.for_each_edge(v, [&](int e) {
            const MpgEdge& ed = game.edge(e);
            const int cs = scc.comp[uz(ed.src)];
            const int cd = scc.comp[uz(ed.dst)];
            if (cs == cd)
                internal[uz(cs)].push_back(
                    {static_cast<std::int64_t>(local[uz(ed.src)]),
                     static_cast<std::int64_t>(local[uz(ed.dst)]), ed.weight});
            else
                crossing[uz(cs)].push_back(cd);
        });
    }

    // Components pop in reverse topological order, so every crossing
    // edge of component c points at a component with a smaller id,
    // whose value is already final.
    std::vector<Rational> comp_value(uz(ncomp));
    for (int c = 0; c < ncomp; ++c) {
        bool set = false;
        Rational best;
        if (!internal[uz(c)].empty()) {
            best = component_cycle_mean(scc.members[uz(c)], internal[uz(c)], objective);
            set = true;
        }
        for (int target : crossing[uz(c)]) {
            const Rational cand = comp_value[uz(target)];
            if (!set || (maximize ? cand > best : cand < best)) {
                best = cand;
                set = true;
            }
        }
        if (!set)
            throw Error(errc::invalid_game, "component without cycle or exit");
        comp_value[uz(c)] = best;
    }

    std::vector<Rational> values(uz(game.num_vertices()));
    for (int v = 0; v < game.num_vertices(); ++v) values[uz(v)] = comp_value[uz(scc.comp[uz(v)])];
    return values;
}

bool verify(const MeanPayoffGame& game, const std::vector<Rational>& values,
            const PositionalStrategy& min_strategy, const PositionalStrategy& max_strategy) {
    if (static_cast<int>(values.size()) != game.num_vertices()) return false;
    const std::vector<Rational> max_response =
        karp_mean_cycle(game, Player::Max, &min_strategy, Player::Min);
    if (max_response != values) return false;
    const std::vector<Rational> min_response =
        karp_mean_cycle(game, Player::Min, &max_strategy, Player::Max);
    return min_response == values;
}

namespace {

/// Initial policy: most favorable immediate weight, lowest edge id on ties.
PositionalStrategy greedy_by_weight(const MeanPayoffGame& game, Player who) {
    PositionalStrategy s(uz(game.num_vertices()), -1);
    for (int v = 0; v < game.num_vertices(); ++v) {
        if (game.owner(v) != who) continue;
        int best = -1;
        for (int e : game.out(v)) {
            if (best == -1 || (who == Player::Min ? game.edge(e).weight < game.edge(best).weight
                                                  : game.edge(e).weight > game.edge(best).weight))
                best = e;
        }
        s[uz(v)] = best;
    }
    return s;
}

/// Policy aiming each owned vertex at the successor with the most
/// favorable target value, lowest edge id on ties.
PositionalStrategy greedy_by_value(const MeanPayoffGame& game, Player who,
                                   const std::vector<Rational>& target) {
    PositionalStrategy s(uz(game.num_vertices()), -1);
    for (int v = 0; v < game.num_vertices(); ++v) {
        if (game.owner(v) != who) continue;
        int best = -1;
        for (int e : game.out(v)) {
            const Rational& cand = target[uz(game.edge(e).dst)];
            if (best == -1 || (who == Player::Min ? cand < target[uz(game.edge(best).dst)]
                                                  : cand > target[uz(game.edge(best).dst)]))
                best = e;
        }
        s[uz(v)] = best;
    }
    return s;
}

/// One-sided strategy improvement for `who`, against an exact best
/// response each round. Switching only on strict improvement makes the
/// evaluation vector decrease (Min) or increase (Max) pointwise with
/// strict progress at every switched vertex, so this terminates; the
/// fixpoint may still be suboptimal, which is why solve() cross-checks
/// the two sides.
std::pair<std::vector<Rational>, PositionalStrategy> improve_side(const MeanPayoffGame& game,
                                                                  Player who,
                                                                  PositionalStrategy policy) {
    const Player adversary = opponent(who);
    while (true) {
        const std::vector<Rational> vals = karp_mean_cycle(game, adversary, &policy, who);
        bool changed = false;
        for (int v = 0; v < game.num_vertices(); ++v) {
            if (game.owner(v) != who) continue;
            int best = policy[uz(v)];
            Rational best_val = vals[uz(v)];
            for (int e : game.out(v)) {
                const Rational& cand = vals[uz(game.edge(e).dst)];
                if (who == Player::Min ? cand < best_val : cand > best_val) {
                    best_val = cand;
                    best = e;
                }
            }
            if (best != policy[uz(v)]) {
                policy[uz(v)] = best;
                changed = true;
            }
        }
        if (!changed) return {vals, policy};
    }
}

/// Builds a positional strategy for `who` that certifies `values`.
///
/// Within each value class g = p/q the reduced edge weight q*w - p
/// (negated for Min) turns "cycle mean no worse than g" into "cycle sum
/// nonnegative". The function computes the least energy progress
/// measure of the class subgame where `who` keeps only class-staying
/// edges and the opponent keeps every class-staying edge, then picks at
/// each owned vertex the lowest-id edge meeting the measure. Every
/// chosen or opposing class edge then satisfies f(src) >= f(dst) - r,
/// so partial reduced sums along class plays are bounded below and any
/// cycle the opponent can close has mean no worse than g; cross-class
/// moves only change the class in the opponent's disfavor. Correct
/// values keep every least measure below |class| * max|r|, so escaping
/// that bound means `values` are not the game's values.
PositionalStrategy synthesize_tight(const MeanPayoffGame& game, Player who,
                                    const std::vector<Rational>& values,
                                    std::int64_t lift_limit) {
    PositionalStrategy s(uz(game.num_vertices()), -1);
    std::map<Rational, std::vector<int>> classes;
    for (int v = 0; v < game.num_vertices(); ++v) classes[values[uz(v)]].push_back(v);

    std::vector<int> pos(uz(game.num_vertices()), -1);
    std::int64_t work = 0;
    for (const auto& [g, members] : classes) {
        const int m = static_cast<int>(members.size());
        for (int i = 0; i < m; ++i) pos[uz(members[uz(i)])] = i;

        // Class-staying edges as (edge id, member index of dst, reduced
        // weight), in ascending edge id order per vertex.
        std::vector<std::vector<std::tuple<int, int, __int128>>> edges(uz(m));
        __int128 max_abs_r = 0;
        for (int i = 0; i < m; ++i) {
            for (int e : game.out(members[uz(i)])) {
                if (values[uz(game.edge(e).dst)] != g) continue;
                __int128 r = static_cast<__int128>(g.den) * game.edge(e).weight -
                             static_cast<__int128>(g.num);
                if (who == Player::Min) r = -r;
                if (r < 0 ? -r > max_abs_r : r > max_abs_r) max_abs_r = r < 0 ? -r : r;
                edges[uz(i)].emplace_back(e, pos[uz(game.edge(e).dst)], r);
            }
            // Local optimality pins the extremum to a successor of equal
            // value, so an empty set refutes `values` for either owner.
            if (edges[uz(i)].empty())
                throw Error(errc::solver_stalled, "no locally consistent edge after rounding");
        }
        const __int128 bound = static_cast<__int128>(m) * max_abs_r;

        std::vector<__int128> f(uz(m), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < m; ++i) {
                work += static_cast<std::int64_t>(edges[uz(i)].size());
                if (work > lift_limit)
                    throw Error(errc::solver_stalled, "energy lifting exceeded its work budget");
                const bool owned = game.owner(members[uz(i)]) == who;
                __int128 want = owned ? bound + 1 : 0;
                for (const auto& [e, j, r] : edges[uz(i)]) {
                    __int128 need = f[uz(j)] - r;
                    if (need < 0) need = 0;
                    if (owned ? need < want : need > want) want = need;
                }
                if (want > f[uz(i)]) {
                    if (want > bound)
                        throw Error(errc::solver_stalled,
                                    "energy measure escaped its bound; values are inconsistent");
                    f[uz(i)] = want;
                    changed = true;
                }
            }
        }

        for (int i = 0; i < m; ++i) {
            if (game.owner(members[uz(i)]) != who) continue;
            for (const auto& [e, j, r] : edges[uz(i)]) {
                __int128 need = f[uz(j)] - r;
                if (need < 0) need = 0;
                if (need == f[uz(i)]) {
                    s[uz(members[uz(i)])] = e;
                    break;
                }
            }
        }
        for (int v : members) pos[uz(v)] = -1;
    }
    return s;
}

}  // namespace

SolveResult solve(const MeanPayoffGame& game, const SolveOptions& options) {
    SolveResult result;
    PositionalStrategy min_init = greedy_by_weight(game, Player::Min);
    PositionalStrategy max_init = greedy_by_weight(game, Player::Max);
    for (int round = 0; round < options.improvement_rounds; ++round) {
        auto [upper, min_policy] = improve_side(game, Player::Min, min_init);
        auto [lower, max_policy] = improve_side(game, Player::Max, max_init);
        if (upper == lower) {
            result.values = std::move(upper);
            result.min_strategy = std::move(min_policy);
            result.max_strategy = std::move(max_policy);
            result.rounds = round;
            result.verified = verify(game, result.values, result.min_strategy, result.max_strategy);
            if (!result.verified) {
                // The fixpoint policies can agree on values yet fail as
                // certificates; rebuild both from the values directly.
                result.min_strategy = synthesize_tight(game, Player::Min, result.values,
                                                       options.synthesis_lift_limit);
                result.max_strategy = synthesize_tight(game, Player::Max, result.values,
                                                       options.synthesis_lift_limit);
                result.verified =
                    verify(game, result.values, result.min_strategy, result.max_strategy);
                if (!result.verified)
                    throw Error(errc::solver_stalled, "agreeing sides failed certification");
            }
            return result;
        }
        // Re-seed each side from the other's bound; the bounds carry
        // global information the local fixpoints lack.
        min_init = greedy_by_value(game, Player::Min, lower);
        max_init = greedy_by_value(game, Player::Max, upper);
    }

    // Horizon route: after 4 n^3 W steps the per-step average is within
    // 1/(2 n^2) of the value, and distinct candidate values (rationals
    // with denominator <= n) are at least 1/n^2 apart, so rounding is
    // unambiguous.
    const std::int64_t n = game.num_vertices();
    const std::int64_t w = game.weight_scale();
    const __int128 horizon = 4 * static_cast<__int128>(n) * n * n * w;
    const __int128 work = horizon * game.num_edges();
    if (work > options.horizon_work_limit)
        throw Error(errc::solver_stalled,
                    "strategy improvement kept disagreeing and the exact horizon is out of reach");
    const std::int64_t steps = static_cast<std::int64_t>(horizon);
    const std::vector<std::int64_t> nu = value_iteration(game, steps);
    std::vector<Rational> values(uz(static_cast<int>(n)));
    for (int v = 0; v < n; ++v)
        values[uz(v)] = round_to_cycle_mean(Rational(nu[uz(v)], steps), n);

    PositionalStrategy min_s =
        synthesize_tight(game, Player::Min, values, options.synthesis_lift_limit);
    PositionalStrategy max_s =
        synthesize_tight(game, Player::Max, values, options.synthesis_lift_limit);
    if (!verify(game, values, min_s, max_s))
        throw Error(errc::solver_stalled, "could not certify strategies for rounded values");
    result.values = std::move(values);
    result.min_strategy = std::move(min_s);
    result.max_strategy = std::move(max_s);
    result.verified = true;
    result.rounds = options.improvement_rounds;
    result.used_value_iteration = true;
    return result;
}

std::vector<Rational> brute_force_solve(const MeanPayoffGame& game, std::int64_t limit) {
    const int n = game.num_vertices();
    __int128 pairs = 1;
    for (int v = 0; v < n; ++v) {
        pairs *= static_cast<__int128>(game.out(v).size());
        if (pairs > limit)
            throw Error(errc::too_large, "strategy pair count exceeds " + std::to_string(limit));
    }

    std::vector<int> min_vertices, max_vertices;
    for (int v = 0; v < n; ++v)
        (game.owner(v) == Player::Min ? min_vertices : max_vertices).push_back(v);

    std::vector<int> choice(uz(n));
    std::vector<Rational> play(uz(n));
    std::vector<int> mark(uz(n));

    // Every vertex has exactly one successor under `choice`; the play
    // value from v is the mean of the cycle the walk falls into.
    auto evaluate = [&]() {
        std::fill(mark.begin(), mark.end(), -1);
        std::vector<int> path;
        for (int v0 = 0; v0 < n; ++v0) {
            if (mark[uz(v0)] == -2) continue;
            path.clear();
            int v = v0;
            while (mark[uz(v)] == -1) {
                mark[uz(v)] = static_cast<int>(path.size());
                path.push_back(v);
                v = game.edge(choice[uz(v)]).dst;
            }
            Rational tail_value;
            if (mark[uz(v)] == -2) {
                tail_value = play[uz(v)];
            } else {
                std::int64_t total = 0;
                const int start = mark[uz(v)];
                for (std::size_t i = static_cast<std::size_t>(start); i < path.size(); ++i)
                    total += game.edge(choice[uz(path[i])]).weight;
                tail_value = Rational(total, static_cast<std::int64_t>(path.size()) - start);
            }
            for (int u : path) {
                play[uz(u)] = tail_value;
                mark[uz(u)] = -2;
            }
        }
    };

    std::vector<Rational> best_overall(uz(n));
    bool first_min = true;
    std::vector<std::size_t> min_pick(min_vertices.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < min_vertices.size(); ++i)
            choice[uz(min_vertices[i])] = game.out(min_vertices[i])[min_pick[i]];

        std::vector<Rational> response(uz(n));
        bool first_max = true;
        std::vector<std::size_t> max_pick(max_vertices.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < max_vertices.size(); ++i)
                choice[uz(max_vertices[i])] = game.out(max_vertices[i])[max_pick[i]];
            evaluate();
            if (first_max) {
                response = play;
                first_max = false;
            } else {
                for (int v = 0; v < n; ++v)
                    if (play[uz(v)] > response[uz(v)]) response[uz(v)] = play[uz(v)];
            }
            std::size_t i = 0;
            for (; i < max_pick.size(); ++i) {
                if (++max_pick[i] < game.out(max_vertices[i]).size()) break;
                max_pick[i] = 0;
            }
            if (i == max_pick.size()) break;
        }

        if (first_min) {
            best_overall = response;
            first_min = false;
        } else {
            for (int v = 0; v < n; ++v)
                if (response[uz(v)] < best_overall[uz(v)]) best_overall[uz(v)] = response[uz(v)];
        }
        std::size_t i = 0;
        for (; i < min_pick.size(); ++i) {
            if (++min_pick[i] < game.out(min_vertices[i]).size()) break;
            min_pick[i] = 0;
        }
        if (i == min_pick.size()) break;
    }
    return best_overall;
}

}  // namespace atg
