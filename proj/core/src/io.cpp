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

#include "atg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace atg {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_parse(const std::string& msg) { throw Error(errc::parse_error, msg); }

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        fail_parse(e.what());
    }
}

const ordered_json& need(const ordered_json& j, const char* key, const char* context) {
    if (!j.is_object()) fail_parse(std::string(context) + " must be an object");
    auto it = j.find(key);
    if (it == j.end())
        fail_parse(std::string("missing '") + key + "' in " + context);
    return *it;
}

std::string need_string(const ordered_json& j, const char* key, const char* context) {
    const ordered_json& v = need(j, key, context);
    if (!v.is_string()) fail_parse(std::string("'") + key + "' in " + context + " must be a string");
    return v.get<std::string>();
}

std::int64_t need_int(const ordered_json& j, const char* key, const char* context) {
    const ordered_json& v = need(j, key, context);
    if (!v.is_number_integer())
        fail_parse(std::string("'") + key + "' in " + context + " must be an integer");
    return v.get<std::int64_t>();
}

Player parse_owner(const std::string& s, const char* context) {
    if (s == "min") return Player::Min;
    if (s == "max") return Player::Max;
    fail_parse(std::string("owner in ") + context + " must be 'min' or 'max', got '" + s + "'");
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

ordered_json rational_json(const Rational& r) { return ordered_json(r.to_string()); }

Rational rational_from_json(const ordered_json& j, const char* context) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail_parse(std::string(context) + " must be an integer or a 'p/q' string");
}

ordered_json valuation_json(const TimedGameAutomaton& a, const ClockValuation& v) {
    ordered_json out = ordered_json::object();
    for (int c = 0; c < a.num_clocks(); ++c) out[a.clock_name(c)] = rational_json(v[c]);
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_parse("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational parse_rational(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string s = text.substr(begin, end - begin);
    if (s.empty()) fail_parse("empty rational");
    const std::size_t slash = s.find('/');
    auto parse_int = [&](const std::string& part, const char* what) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            fail_parse(std::string("bad ") + what + " in rational '" + s + "'");
        return value;
    };
    if (slash == std::string::npos) return Rational(parse_int(s, "integer"));
    const std::int64_t num = parse_int(s.substr(0, slash), "numerator");
    const std::int64_t den = parse_int(s.substr(slash + 1), "denominator");
    if (den <= 0) fail_parse("denominator must be positive in '" + s + "'");
    return Rational(num, den);
}

Zone parse_zone(const std::string& text, const std::vector<std::string>& clock_names) {
    std::string t = text;
    {
        std::size_t b = 0, e = t.size();
        while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
        t = t.substr(b, e - b);
    }
    if (t.empty() || t == "true") return Zone::always();
    if (t == "false") return Zone::none();

    Zone zone;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    };
    auto error_at = [&](const std::string& msg) -> void {
        fail_parse("in constraint '" + text + "' at offset " + std::to_string(pos) + ": " + msg);
    };
    auto ident = [&]() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < t.size() &&
               (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_'))
            ++pos;
        if (pos == start) error_at("expected a clock name");
        return t.substr(start, pos - start);
    };
    auto clock_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < clock_names.size(); ++i)
            if (clock_names[i] == name) return static_cast<ClockId>(i);
        throw Error(errc::unknown_clock,
                    "unknown clock '" + name + "' in constraint '" + text + "'");
    };

    while (true) {
        SimpleConstraint sc;
        sc.clock = clock_id(ident());
        skip_ws();
        if (pos < t.size() && t[pos] == '-') {
            ++pos;
            sc.other = clock_id(ident());
            skip_ws();
        }
        if (pos >= t.size()) error_at("expected a relation");
        const char rel = t[pos];
        if (rel == '<') {
            ++pos;
            sc.op = (pos < t.size() && t[pos] == '=') ? (++pos, RelOp::LE) : RelOp::LT;
        } else if (rel == '>') {
            ++pos;
            sc.op = (pos < t.size() && t[pos] == '=') ? (++pos, RelOp::GE) : RelOp::GT;
        } else if (rel == '=') {
            ++pos;
            if (pos < t.size() && t[pos] == '=') ++pos;
            sc.op = RelOp::EQ;
        } else {
            error_at("expected one of < <= = >= >");
        }
        skip_ws();
        const std::size_t dstart = pos;
        std::int64_t bound = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            bound = bound * 10 + (t[pos] - '0');
            if (bound > 1'000'000'000) error_at("constant too large");
            ++pos;
        }
        if (pos == dstart) error_at("expected a nonnegative integer");
        sc.bound = static_cast<int>(bound);
        zone.conjuncts.push_back(sc);
        skip_ws();
        if (pos == t.size()) break;
        if (pos + 1 < t.size() && t[pos] == '&' && t[pos + 1] == '&') {
            pos += 2;
            continue;
        }
        error_at("expected '&&' or end of constraint");
    }
    return zone;
}

std::string zone_to_string(const Zone& zone, const std::vector<std::string>& clock_names) {
    if (zone.never) return "false";
    if (zone.conjuncts.empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < zone.conjuncts.size(); ++i) {
        const SimpleConstraint& sc = zone.conjuncts[i];
        if (i > 0) out += " && ";
        out += clock_names[static_cast<std::size_t>(sc.clock)];
        if (sc.is_difference()) out += " - " + clock_names[static_cast<std::size_t>(sc.other)];
        out += std::string(" ") + relop_name(sc.op) + " " + std::to_string(sc.bound);
    }
    return out;
}

TimedGameAutomaton parse_automaton(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    if (!j.is_object()) fail_parse("automaton must be a JSON object");

    const ordered_json& jclocks = need(j, "clocks", "automaton");
    if (!jclocks.is_array() || jclocks.empty()) fail_parse("'clocks' must be a nonempty array");
    std::vector<std::string> clocks;
    for (const ordered_json& c : jclocks) {
        if (!c.is_string()) fail_parse("clock names must be strings");
        const std::string name = c.get<std::string>();
        if (!is_identifier(name))
            fail_parse("clock name '" + name + "' is not an identifier");
        for (const std::string& prev : clocks)
            if (prev == name)
                throw Error(errc::invalid_automaton, "duplicate clock '" + name + "'");
        clocks.push_back(name);
    }

    const std::int64_t bound = need_int(j, "bound", "automaton");
    if (bound < 1 || bound > 1'000'000)
        throw Error(errc::invalid_automaton, "'bound' must lie in [1, 1000000]");

    const ordered_json& jlocs = need(j, "locations", "automaton");
    if (!jlocs.is_array() || jlocs.empty()) fail_parse("'locations' must be a nonempty array");
    std::vector<std::string> locations;
    std::vector<Player> owners;
    std::vector<Zone> state_zones;
    for (const ordered_json& l : jlocs) {
        const std::string name = need_string(l, "name", "location");
        if (name.empty()) fail_parse("location names must be nonempty");
        for (const std::string& prev : locations)
            if (prev == name)
                throw Error(errc::invalid_automaton, "duplicate location '" + name + "'");
        locations.push_back(name);
        owners.push_back(parse_owner(need_string(l, "owner", "location"), "location"));
        auto it = l.find("state_constraint");
        if (it == l.end()) {
            state_zones.push_back(Zone::always());
        } else {
            if (!it->is_string()) fail_parse("'state_constraint' must be a string");
            state_zones.push_back(parse_zone(it->get<std::string>(), clocks));
        }
    }
    auto location_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < locations.size(); ++i)
            if (locations[i] == name) return static_cast<LocationId>(i);
        throw Error(errc::unknown_location, "unknown location '" + name + "'");
    };
    auto clock_pos = [&](const std::string& name) {
        for (std::size_t i = 0; i < clocks.size(); ++i)
            if (clocks[i] == name) return static_cast<ClockId>(i);
        throw Error(errc::unknown_clock, "unknown clock '" + name + "'");
    };

    const ordered_json& jacts = need(j, "actions", "automaton");
    if (!jacts.is_array() || jacts.empty()) fail_parse("'actions' must be a nonempty array");
    std::vector<ActionDef> actions;
    for (const ordered_json& a : jacts) {
        ActionDef def;
        def.name = need_string(a, "name", "action");
        if (def.name.empty()) fail_parse("action names must be nonempty");
        for (const ActionDef& prev : actions)
            if (prev.name == def.name)
                throw Error(errc::invalid_automaton, "duplicate action '" + def.name + "'");
        def.resets.assign(clocks.size(), false);
        const ordered_json& jresets = need(a, "resets", "action");
        if (!jresets.is_array()) fail_parse("'resets' must be an array of clock names");
        for (const ordered_json& r : jresets) {
            if (!r.is_string()) fail_parse("'resets' must be an array of clock names");
            def.resets[static_cast<std::size_t>(clock_pos(r.get<std::string>()))] = true;
        }
        // No 'enabled' key: the action is enabled everywhere. With the
        // key, locations missing from the map are disabled.
        auto eit = a.find("enabled");
        if (eit == a.end()) {
            def.enabled.assign(locations.size(), Zone::always());
        } else {
            if (!eit->is_object()) fail_parse("'enabled' must map locations to constraints");
            def.enabled.assign(locations.size(), Zone::none());
            for (const auto& [loc_name, constraint] : eit->items()) {
                if (!constraint.is_string()) fail_parse("enabling constraints must be strings");
                def.enabled[static_cast<std::size_t>(location_id(loc_name))] =
                    parse_zone(constraint.get<std::string>(), clocks);
            }
        }
        def.target.assign(locations.size(), -1);
        auto dit = a.find("delta");
        if (dit != a.end()) {
            if (!dit->is_object()) fail_parse("'delta' must map locations to locations");
            for (const auto& [loc_name, target] : dit->items()) {
                if (!target.is_string()) fail_parse("'delta' targets must be location names");
                def.target[static_cast<std::size_t>(location_id(loc_name))] =
                    location_id(target.get<std::string>());
            }
        }
        actions.push_back(std::move(def));
    }

    std::optional<Configuration> initial;
    auto iit = j.find("initial");
    if (iit != j.end()) {
        const std::string loc = need_string(*iit, "location", "initial");
        const ordered_json& jval = need(*iit, "valuation", "initial");
        if (!jval.is_object()) fail_parse("'valuation' must map clocks to rationals");
        ClockValuation v;
        v.values.assign(clocks.size(), Rational(0));
        std::vector<bool> present(clocks.size(), false);
        for (const auto& [clock_name, value] : jval.items()) {
            const ClockId c = clock_pos(clock_name);
            v.values[static_cast<std::size_t>(c)] = rational_from_json(value, "clock value");
            present[static_cast<std::size_t>(c)] = true;
        }
        for (std::size_t i = 0; i < clocks.size(); ++i)
            if (!present[i]) fail_parse("initial valuation misses clock '" + clocks[i] + "'");
        initial = Configuration{location_id(loc), std::move(v)};
    }

    return TimedGameAutomaton(std::move(clocks), static_cast<int>(bound), std::move(locations),
                              std::move(owners), std::move(state_zones), std::move(actions),
                              std::move(initial));
}

std::string serialize_automaton(const TimedGameAutomaton& a) {
    ordered_json j;
    j["clocks"] = ordered_json::array();
    std::vector<std::string> clock_names;
    for (int c = 0; c < a.num_clocks(); ++c) {
        j["clocks"].push_back(a.clock_name(c));
        clock_names.push_back(a.clock_name(c));
    }
    j["bound"] = a.bound();
    j["locations"] = ordered_json::array();
    for (int l = 0; l < a.num_locations(); ++l) {
        ordered_json loc;
        loc["name"] = a.location_name(l);
        loc["owner"] = player_name(a.owner(l));
        if (!a.state_zone(l).is_always())
            loc["state_constraint"] = zone_to_string(a.state_zone(l), clock_names);
        j["locations"].push_back(std::move(loc));
    }
    j["actions"] = ordered_json::array();
    for (int act = 0; act < a.num_actions(); ++act) {
        const ActionDef& def = a.action(act);
        ordered_json ja;
        ja["name"] = def.name;
        ja["resets"] = ordered_json::array();
        for (int c = 0; c < a.num_clocks(); ++c)
            if (def.resets[static_cast<std::size_t>(c)]) ja["resets"].push_back(a.clock_name(c));
        ja["enabled"] = ordered_json::object();
        for (int l = 0; l < a.num_locations(); ++l)
            if (!def.enabled[static_cast<std::size_t>(l)].never)
                ja["enabled"][a.location_name(l)] =
                    zone_to_string(def.enabled[static_cast<std::size_t>(l)], clock_names);
        ja["delta"] = ordered_json::object();
        for (int l = 0; l < a.num_locations(); ++l)
            if (def.target[static_cast<std::size_t>(l)] >= 0)
                ja["delta"][a.location_name(l)] =
                    a.location_name(def.target[static_cast<std::size_t>(l)]);
        j["actions"].push_back(std::move(ja));
    }
    if (a.initial()) {
        ordered_json init;
        init["location"] = a.location_name(a.initial()->location);
        init["valuation"] = valuation_json(a, a.initial()->valuation);
        j["initial"] = std::move(init);
    }
    return dump(j);
}

MeanPayoffGame parse_mpg(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    const ordered_json& jv = need(j, "vertices", "game");
    if (!jv.is_array() || jv.empty()) fail_parse("'vertices' must be a nonempty array");
    std::vector<Player> owners;
    for (const ordered_json& v : jv) {
        if (need_int(v, "id", "vertex") != static_cast<std::int64_t>(owners.size()))
            fail_parse("vertex ids must be 0..n-1 in order");
        owners.push_back(parse_owner(need_string(v, "owner", "vertex"), "vertex"));
    }
    const ordered_json& je = need(j, "edges", "game");
    if (!je.is_array()) fail_parse("'edges' must be an array");
    std::vector<MpgEdge> edges;
    for (const ordered_json& e : je) {
        MpgEdge ed;
        ed.src = static_cast<int>(need_int(e, "src", "edge"));
        ed.dst = static_cast<int>(need_int(e, "dst", "edge"));
        ed.weight = need_int(e, "weight", "edge");
        if (ed.weight > 1'000'000'000'000LL || ed.weight < -1'000'000'000'000LL)
            fail_parse("edge weights must fit in 40 bits");
        edges.push_back(ed);
    }
    return MeanPayoffGame(std::move(owners), std::move(edges));
}

std::string serialize_mpg(const MeanPayoffGame& game) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < game.num_vertices(); ++v)
        j["vertices"].push_back({{"id", v}, {"owner", player_name(game.owner(v))}});
    j["edges"] = ordered_json::array();
    for (const MpgEdge& e : game.edges())
        j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"weight", e.weight}});
    return dump(j);
}

std::string serialize_mpg_solution(const SolveResult& result) {
    ordered_json j;
    j["values"] = ordered_json::array();
    for (const Rational& v : result.values) j["values"].push_back(rational_json(v));
    j["min_strategy"] = result.min_strategy;
    j["max_strategy"] = result.max_strategy;
    j["verified"] = result.verified;
    return dump(j);
}

std::string serialize_mpg_values(const std::vector<Rational>& values) {
    ordered_json j;
    j["values"] = ordered_json::array();
    for (const Rational& v : values) j["values"].push_back(rational_json(v));
    return dump(j);
}

CountdownGame parse_countdown(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    CountdownGame game;
    const ordered_json& jn = need(j, "nodes", "countdown game");
    if (!jn.is_array() || jn.empty()) fail_parse("'nodes' must be a nonempty array");
    for (const ordered_json& n : jn) {
        if (!n.is_string()) fail_parse("node names must be strings");
        game.nodes.push_back(n.get<std::string>());
    }
    auto node_id = [&](const std::string& name) {
        for (std::size_t i = 0; i < game.nodes.size(); ++i)
            if (game.nodes[i] == name) return static_cast<int>(i);
        throw Error(errc::unknown_location, "unknown node '" + name + "'");
    };
    const ordered_json& jm = need(j, "moves", "countdown game");
    if (!jm.is_array()) fail_parse("'moves' must be an array");
    for (const ordered_json& m : jm) {
        CountdownMove move;
        move.from = node_id(need_string(m, "from", "move"));
        move.to = node_id(need_string(m, "to", "move"));
        move.duration = need_int(m, "duration", "move");
        game.moves.push_back(move);
    }
    game.initial_node = node_id(need_string(j, "initial", "countdown game"));
    game.budget = need_int(j, "budget", "countdown game");
    game.validate();
    return game;
}

std::string serialize_countdown(const CountdownGame& game) {
    ordered_json j;
    j["nodes"] = game.nodes;
    j["moves"] = ordered_json::array();
    for (const CountdownMove& m : game.moves)
        j["moves"].push_back({{"from", game.nodes[static_cast<std::size_t>(m.from)]},
                              {"to", game.nodes[static_cast<std::size_t>(m.to)]},
                              {"duration", m.duration}});
    j["initial"] = game.nodes[static_cast<std::size_t>(game.initial_node)];
    j["budget"] = game.budget;
    return dump(j);
}

std::string serialize_countdown_solution(const CountdownGame& game,
                                         const CountdownSolution& solution) {
    ordered_json j;
    j["p1_wins"] = solution.p1_wins;
    j["budget"] = game.budget;
    j["win"] = ordered_json::array();
    for (std::size_t v = 0; v < game.nodes.size(); ++v) {
        ordered_json row;
        row["node"] = game.nodes[v];
        row["amounts"] = ordered_json::array();
        for (std::int64_t r = 0; r <= game.budget; ++r)
            if (solution.win[v][static_cast<std::size_t>(r)]) row["amounts"].push_back(r);
        j["win"].push_back(std::move(row));
    }
    return dump(j);
}

std::string serialize_cross_validation(const CrossValidation& result) {
    ordered_json j;
    j["p1_wins"] = result.p1_wins;
    j["wait"] = result.wait;
    j["value"] = rational_json(result.value);
    j["value_equals_wait"] = result.value_equals_wait;
    j["vertices"] = result.vertices;
    return dump(j);
}

namespace {

ordered_json brg_vertex_json(const TimedGameAutomaton& a, const BoundaryRegionGraph& brg, int v) {
    const BrgVertex& vx = brg.vertices[static_cast<std::size_t>(v)];
    ordered_json j;
    j["id"] = v;
    j["location"] = a.location_name(vx.config.location);
    j["valuation"] = valuation_json(a, vx.config.valuation);
    j["region"] = to_string(a, vx.region);
    j["owner"] = player_name(vx.owner);
    return j;
}

ordered_json brg_edge_json(const TimedGameAutomaton& a, const BrgEdge& e) {
    ordered_json j;
    j["src"] = e.src;
    j["dst"] = e.dst;
    j["delay"] = rational_json(e.delay);
    j["bound"] = e.witness.bound;
    j["clock"] = a.clock_name(e.witness.clock);
    j["via"] = to_string(a, e.via);
    j["action"] = a.action(e.action).name;
    return j;
}

}  // namespace

std::string brg_to_json(const TimedGameAutomaton& a, const BoundaryRegionGraph& brg) {
    ordered_json j;
    j["initial"] = 0;
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < brg.num_vertices(); ++v) j["vertices"].push_back(brg_vertex_json(a, brg, v));
    j["edges"] = ordered_json::array();
    for (const BrgEdge& e : brg.edges) j["edges"].push_back(brg_edge_json(a, e));
    return dump(j);
}

std::string brg_to_dot(const TimedGameAutomaton& a, const BoundaryRegionGraph& brg) {
    std::ostringstream out;
    out << "digraph brg {\n  rankdir=LR;\n";
    for (int v = 0; v < brg.num_vertices(); ++v) {
        const BrgVertex& vx = brg.vertices[static_cast<std::size_t>(v)];
        std::string val;
        for (int c = 0; c < a.num_clocks(); ++c) {
            if (c > 0) val += ", ";
            val += a.clock_name(c) + "=" + vx.config.valuation[c].to_string();
        }
        out << "  v" << v << " [shape=" << (vx.owner == Player::Min ? "box" : "ellipse")
            << ", label=\"" << dot_escape(a.location_name(vx.config.location)) << "\\n"
            << dot_escape(val) << "\\n" << dot_escape(to_string(a, vx.region)) << "\"];\n";
    }
    for (const BrgEdge& e : brg.edges) {
        out << "  v" << e.src << " -> v" << e.dst << " [label=\""
            << dot_escape(a.action(e.action).name) << ": t=" << e.delay.to_string() << ", "
            << dot_escape(a.clock_name(e.witness.clock)) << "->" << e.witness.bound << " via "
            << dot_escape(to_string(a, e.via)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string brg_to_text(const TimedGameAutomaton& a, const BoundaryRegionGraph& brg) {
    std::ostringstream out;
    out << brg.num_vertices() << " vertices, " << brg.num_edges() << " edges\n";
    for (int v = 0; v < brg.num_vertices(); ++v) {
        const BrgVertex& vx = brg.vertices[static_cast<std::size_t>(v)];
        out << "v" << v << " [" << player_name(vx.owner) << "] "
            << a.location_name(vx.config.location) << " (";
        for (int c = 0; c < a.num_clocks(); ++c) {
            if (c > 0) out << ", ";
            out << a.clock_name(c) << "=" << vx.config.valuation[c].to_string();
        }
        out << ") in " << to_string(a, vx.region) << "\n";
        for (int e : brg.out[static_cast<std::size_t>(v)]) {
            const BrgEdge& ed = brg.edges[static_cast<std::size_t>(e)];
            out << "  --" << a.action(ed.action).name << ", t=" << ed.delay.to_string()
                << " (wait " << a.clock_name(ed.witness.clock) << " to " << ed.witness.bound
                << ", via " << to_string(a, ed.via) << ")--> v" << ed.dst << "\n";
        }
    }
    return out.str();
}

std::string serialize_solved_game(const TimedGameAutomaton& a, const SolvedGame& solved) {
    const BrgVertex& start = solved.brg.vertices.front();
    ordered_json j;
    j["value"] = rational_json(solved.value());
    j["start"] = {{"location", a.location_name(start.config.location)},
                  {"valuation", valuation_json(a, start.config.valuation)}};
    j["scale"] = solved.scale;
    j["vertices"] = solved.brg.num_vertices();
    j["edges"] = solved.brg.num_edges();
    j["verified"] = solved.verified;
    j["values"] = ordered_json::array();
    for (const Rational& v : solved.values) j["values"].push_back(rational_json(v));
    j["min_strategy"] = solved.min_strategy;
    j["max_strategy"] = solved.max_strategy;
    return dump(j);
}

std::string serialize_strategy(const TimedGameAutomaton& a, const SolvedGame& solved,
                               const BoundaryStrategy& strategy) {
    ordered_json j;
    j["player"] = player_name(strategy.player);
    j["region_uniform"] = strategy.region_uniform;
    j["mixed_regions"] = ordered_json::array();
    for (const Region& r : strategy.mixed_regions) j["mixed_regions"].push_back(to_string(a, r));
    j["decisions"] = ordered_json::array();
    for (int v = 0; v < solved.brg.num_vertices(); ++v) {
        const BrgVertex& vx = solved.brg.vertices[static_cast<std::size_t>(v)];
        if (vx.owner != strategy.player) continue;
        auto it = strategy.by_vertex.find(std::make_pair(vx.config, vx.region));
        if (it == strategy.by_vertex.end()) continue;
        const StrategyDecision& d = it->second;
        ordered_json jd;
        jd["vertex"] = v;
        jd["location"] = a.location_name(vx.config.location);
        jd["valuation"] = valuation_json(a, vx.config.valuation);
        jd["bound"] = d.witness.bound;
        jd["clock"] = a.clock_name(d.witness.clock);
        jd["via"] = to_string(a, d.via);
        jd["action"] = a.action(d.action).name;
        j["decisions"].push_back(std::move(jd));
    }
    return dump(j);
}

std::string serialize_trace(const TimedGameAutomaton& a, const SimTrace& trace) {
    ordered_json j;
    j["initial"] = {{"location", a.location_name(trace.initial.location)},
                    {"valuation", valuation_json(a, trace.initial.valuation)}};
    j["steps"] = ordered_json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const SimStep& s = trace.steps[i];
        ordered_json js;
        js["location"] = a.location_name(s.before.location);
        js["valuation"] = valuation_json(a, s.before.valuation);
        js["delay"] = rational_json(s.delay);
        js["action"] = a.action(s.action).name;
        js["running_average"] =
            rational_json(trace.cumulative[i] / Rational(static_cast<std::int64_t>(i) + 1));
        j["steps"].push_back(std::move(js));
    }
    j["total"] = rational_json(trace.total());
    if (!trace.steps.empty())
        j["average"] = rational_json(trace.average(static_cast<int>(trace.steps.size())));
    return dump(j);
}

std::string trace_to_text(const TimedGameAutomaton& a, const SimTrace& trace) {
    std::ostringstream out;
    out << "start " << a.location_name(trace.initial.location) << " (";
    for (int c = 0; c < a.num_clocks(); ++c) {
        if (c > 0) out << ", ";
        out << a.clock_name(c) << "=" << trace.initial.valuation[c].to_string();
    }
    out << ")\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const SimStep& s = trace.steps[i];
        out << "  " << (i + 1) << ". wait " << s.delay.to_string() << ", fire "
            << a.action(s.action).name << "  [avg "
            << (trace.cumulative[i] / Rational(static_cast<std::int64_t>(i) + 1)).to_string()
            << "]\n";
    }
    if (!trace.steps.empty())
        out << "total " << trace.total().to_string() << " over " << trace.steps.size()
            << " steps, average "
            << trace.average(static_cast<int>(trace.steps.size())).to_string() << "\n";
    return out.str();
}

std::string serialize_validation(const ValidationReport& report) {
    ordered_json j;
    j["valid"] = report.ok();
    j["violations"] = ordered_json::array();
    for (const Violation& v : report.violations)
        j["violations"].push_back({{"kind", v.kind}, {"message", v.message}});
    return dump(j);
}

std::string validation_to_text(const ValidationReport& report) {
    if (report.ok()) return "valid\n";
    std::ostringstream out;
    for (const Violation& v : report.violations) out << v.kind << ": " << v.message << "\n";
    return out.str();
}

}  // namespace atg
