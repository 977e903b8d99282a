#pragma once

// JSON encodings of every exchanged object. Parsers are strict: anything off
// contract raises errc::invalid_input naming the offending field.
//
//   hypergraph   {"type":"hypergraph","n":6,"k":3,"edges":[[1,2,4],...]}
//   gf2          {"type":"gf2","rows":2,"cols":3,"bits":[[1,1,0],[0,0,1]]}
//   graph        {"type":"graph","vertices":3,"edges":[[1,2],[2,3]]}
//   partition    {"parts":[[1,2],[3,4],[5,6]]}
//   certificate  {"kind":"separable","x":["-1","3/2",...]}
//                {"kind":"equatable","y":[{"set":[1,3,4],"val":"1"},...]}
//
// All vertex names are 1-based; edge lists are sorted within and
// lexicographically increasing across.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sephyp/error.hpp"
#include "sephyp/feasibility.hpp"
#include "sephyp/hypercore.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/matroid.hpp"
#include "sephyp/oracle_algorithms.hpp"
#include "sephyp/rational.hpp"

namespace sephyp::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* name, const std::string& where) {
    require(j.is_object(), errc::invalid_input, where + ": expected an object");
    auto it = j.find(name);
    require(it != j.end(), errc::invalid_input, where + ": missing field '" + name + "'");
    return *it;
}

inline int integer(const json& j, const std::string& where) {
    require(j.is_number_integer(), errc::invalid_input, where + ": expected an integer");
    const auto v = j.get<long long>();
    require(v >= -(1LL << 30) && v <= (1LL << 30), errc::invalid_input, where + ": integer out of range");
    return static_cast<int>(v);
}

inline const json& array(const json& j, const std::string& where) {
    require(j.is_array(), errc::invalid_input, where + ": expected an array");
    return j;
}

/// Strictly increasing 1-based vertex list inside [1, n].
inline VertexSet vertex_list(const json& j, int n, const std::string& where) {
    VertexSet s;
    int prev = 0;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        const auto at = where + "[" + std::to_string(i) + "]";
        const int v = integer(j[i], at);
        require(v >= 1 && v <= n, errc::invalid_input, at + ": vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
        require(v > prev, errc::invalid_input, at + ": vertices must be strictly increasing");
        s = s.with(v - 1);
        prev = v;
    }
    return s;
}

inline json vertex_list(VertexSet s) { return s.one_based(); }

} // namespace detail

inline json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::invalid_input, origin + ": " + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::invalid_input, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

// ---------------------------------------------------------------------------

inline Hypergraph hypergraph_from_json(const json& j) {
    const int n = detail::integer(detail::field(j, "n", "hypergraph"), "n");
    const int k = detail::integer(detail::field(j, "k", "hypergraph"), "k");
    require(k >= 1 && k < n && n <= max_vertices, errc::invalid_input, "hypergraph: need 1 <= k < n <= 64");
    const auto& edges = detail::array(detail::field(j, "edges", "hypergraph"), "edges");
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto where = "edges[" + std::to_string(i) + "]";
        const auto s = detail::vertex_list(edges[i], n, where);
        require(s.size() == k, errc::invalid_input, where + ": expected " + std::to_string(k) + " vertices");
        if (!sets.empty()) {
            require(s != sets.back(), errc::invalid_input, where + ": duplicate edge " + to_string(s));
            require(lex_less(sets.back(), s), errc::invalid_input, where + ": edges must be in lexicographic order");
        }
        sets.push_back(s);
    }
    return Hypergraph(n, k, std::move(sets));
}

inline json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (auto e : h.edges())
        edges.push_back(detail::vertex_list(e));
    return {{"type", "hypergraph"}, {"n", h.n()}, {"k", h.k()}, {"edges", edges}};
}

inline Partition partition_from_json(const json& j, int n) {
    const auto& parts = detail::array(detail::field(j, "parts", "partition"), "parts");
    Partition p;
    for (std::size_t i = 0; i < parts.size(); ++i)
        p.parts.push_back(detail::vertex_list(parts[i], n, "parts[" + std::to_string(i) + "]"));
    return p;
}

inline Gf2Matrix gf2_from_json(const json& j) {
    const int rows = detail::integer(detail::field(j, "rows", "gf2"), "rows");
    const int cols = detail::integer(detail::field(j, "cols", "gf2"), "cols");
    const auto& bits = detail::array(detail::field(j, "bits", "gf2"), "bits");
    require(static_cast<int>(bits.size()) == rows, errc::invalid_input, "bits: expected " + std::to_string(rows) + " rows");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < bits.size(); ++r) {
        const auto where = "bits[" + std::to_string(r) + "]";
        const auto& row = detail::array(bits[r], where);
        require(static_cast<int>(row.size()) == cols, errc::invalid_input, where + ": expected " + std::to_string(cols) + " entries");
        std::vector<int> vals;
        for (std::size_t c = 0; c < row.size(); ++c)
            vals.push_back(detail::integer(row[c], where + "[" + std::to_string(c) + "]"));
        table.push_back(std::move(vals));
    }
    return Gf2Matrix::from_rows(table);
}

inline json to_json(const Gf2Matrix& m) {
    json bits = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c)
            row.push_back(static_cast<int>((m.columns[static_cast<std::size_t>(c)] >> r) & 1U));
        bits.push_back(row);
    }
    return {{"type", "gf2"}, {"rows", m.rows}, {"cols", m.cols}, {"bits", bits}};
}

inline Graph graph_from_json(const json& j) {
    Graph g;
    g.vertices = detail::integer(detail::field(j, "vertices", "graph"), "vertices");
    require(g.vertices >= 1, errc::invalid_input, "vertices: must be positive");
    const auto& edges = detail::array(detail::field(j, "edges", "graph"), "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto where = "edges[" + std::to_string(i) + "]";
        const auto& e = detail::array(edges[i], where);
        require(e.size() == 2, errc::invalid_input, where + ": expected [u, v]");
        const int u = detail::integer(e[0], where + "[0]");
        const int v = detail::integer(e[1], where + "[1]");
        require(u >= 1 && u <= g.vertices && v >= 1 && v <= g.vertices, errc::invalid_input, where + ": endpoint out of range");
        g.edges.emplace_back(u - 1, v - 1);
    }
    return g;
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges)
        edges.push_back({u + 1, v + 1});
    return {{"type", "graph"}, {"vertices", g.vertices}, {"edges", edges}};
}

// ---------------------------------------------------------------------------

using Instance = std::variant<Hypergraph, Gf2Matrix, Graph>;

inline Instance instance_from_json(const json& j) {
    const auto& type = detail::field(j, "type", "instance");
    require(type.is_string(), errc::invalid_input, "type: expected a string");
    const auto t = type.get<std::string>();
    if (t == "hypergraph")
        return hypergraph_from_json(j);
    if (t == "gf2")
        return gf2_from_json(j);
    if (t == "graph")
        return graph_from_json(j);
    fail(errc::invalid_input, "type: unknown instance type '" + t + "'");
}

inline json to_json(const Instance& inst) {
    return std::visit([](const auto& v) { return to_json(v); }, inst);
}

/// The hypergraph an instance denotes: itself, or the bases of its matroid.
inline Hypergraph materialize(const Instance& inst, const Budgets& budgets = {}) {
    if (const auto* h = std::get_if<Hypergraph>(&inst))
        return *h;
    if (const auto* m = std::get_if<Gf2Matrix>(&inst))
        return from_gf2_matrix(*m, budgets).matroid.carrier();
    return from_graph(std::get<Graph>(inst), budgets).carrier();
}

// ---------------------------------------------------------------------------

inline json to_json(const Certificate& c) {
    if (c.kind() == Kind::separable) {
        json xs = json::array();
        for (const auto& v : c.x().values)
            xs.push_back(format_rational(v));
        return {{"kind", "separable"}, {"x", xs}};
    }
    json ys = json::array();
    for (const auto& [set, val] : c.y().entries)
        ys.push_back({{"set", detail::vertex_list(set)}, {"val", format_rational(val)}});
    return {{"kind", "equatable"}, {"y", ys}};
}

inline Rational rational_from_json(const json& j, const std::string& where) {
    require(j.is_string(), errc::invalid_input, where + ": rationals are encoded as strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const error& e) {
        fail(errc::invalid_input, where + ": " + e.what());
    }
}

/// Shape checks against h (x length n; y keys valid k-sets, each at most once).
/// Value constraints (y >= 0, balance) are left to the verifiers.
inline Certificate certificate_from_json(const json& j, const Hypergraph& h) {
    const auto& kind = detail::field(j, "kind", "certificate");
    require(kind.is_string(), errc::invalid_input, "kind: expected a string");
    const auto k = kind.get<std::string>();
    if (k == "separable") {
        const auto& xs = detail::array(detail::field(j, "x", "certificate"), "x");
        require(static_cast<int>(xs.size()) == h.n(), errc::invalid_input,
                "x: expected " + std::to_string(h.n()) + " values, got " + std::to_string(xs.size()));
        VertexLabeling x;
        for (std::size_t i = 0; i < xs.size(); ++i)
            x.values.push_back(rational_from_json(xs[i], "x[" + std::to_string(i) + "]"));
        return Certificate(std::move(x));
    }
    require(k == "equatable", errc::invalid_input, "kind: expected 'separable' or 'equatable'");
    const auto& ys = detail::array(detail::field(j, "y", "certificate"), "y");
    SetLabeling y;
    std::vector<VertexSet> seen;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const auto where = "y[" + std::to_string(i) + "]";
        const auto s = detail::vertex_list(detail::field(ys[i], "set", where), h.n(), where + ".set");
        require(s.size() == h.k(), errc::invalid_input, where + ".set: expected " + std::to_string(h.k()) + " vertices");
        require(std::find(seen.begin(), seen.end(), s) == seen.end(), errc::invalid_input,
                where + ".set: " + to_string(s) + " labeled twice");
        seen.push_back(s);
        y.entries.emplace_back(s, rational_from_json(detail::field(ys[i], "val", where), where + ".val"));
    }
    return Certificate(std::move(y));
}

// ---------------------------------------------------------------------------

inline json trace_to_json(const std::vector<std::pair<VertexSet, bool>>& trace) {
    json out = json::array();
    for (const auto& [set, ans] : trace)
        out.push_back({{"query", detail::vertex_list(set)}, {"independent", ans}});
    return out;
}

inline json to_json(const IndistinguishabilityReport& r) {
    json j;
    j["verdict"] = r.verdict ? json(std::string(to_string(*r.verdict))) : json(nullptr);
    j["queries"] = r.queries;
    j["trace"] = trace_to_json(r.trace);
    j["unqueried_pair"] = r.unqueried_pair
                              ? json::array({detail::vertex_list(r.unqueried_pair->first), detail::vertex_list(r.unqueried_pair->second)})
                              : json(nullptr);
    j["k"] = r.k;
    j["ksets_queried"] = r.ksets_queried;
    j["queried_f1_or_f2"] = r.queried_f1_or_f2;
    j["consistent_with_h2"] = r.consistent_with_h2;
    j["complementary_pairs"] = r.complementary_pairs;
    j["pairs_touched"] = r.pairs_touched;
    j["threshold_pairs_half_binomial"] = r.complementary_pairs;
    j["threshold_queries_2k_minus_1"] = r.query_threshold;
    if (r.alternative) {
        j["alternative"] = to_json(*r.alternative);
        j["alternative_kind"] = std::string(to_string(*r.alternative_kind));
        j["alternative_consistent"] = r.alternative_consistent;
    }
    if (!r.wrong_on.empty())
        j["verdict_wrong_on"] = r.wrong_on;
    return j;
}

inline json to_json(const OracleDecision& d) {
    return {{"verdict", std::string(to_string(d.verdict))}, {"queries", d.queries_used}, {"trace", trace_to_json(d.trace)}, {"unqueried_pair", nullptr}};
}

} // namespace sephyp::io
