#pragma once

// Query complexity of separability for matroids behind an independence oracle:
// a polynomial decision for binary matroids and the adversary pair of paving
// matroids that no strategy with few k-set queries can tell apart.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/feasibility.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/matroid.hpp"
#include "sephyp/vertex_set.hpp"

namespace sephyp {

struct OracleDecision {
    Kind verdict = Kind::separable;
    std::size_t queries_used = 0;
    std::vector<std::pair<VertexSet, bool>> trace;
};

/// Decides a binary k-matroid on n elements from pair queries, singleton
/// queries where needed, and at most one k-set query. Loops are dropped; the
/// verdict then depends on n' (non-loops), the lines, and the largest line L:
///
///   n' <= k + 1                          -> separable
///   >= 2 nontrivial lines                -> equatable
///   n' == |L| + k - 1                    -> separable
///   n' == |L| + k, |L| >= 2, V' - L a basis -> separable
///   otherwise                            -> equatable
///
/// The fourth case, where bases avoiding L exist, is separable although
/// n' >= l + k; it needs the one k-set query.
/// Pairs are asked first, so elements already seen in an independent pair
/// need no singleton query; this keeps the total within n + C(n, 2).
/// On oracles that are not binary matroids the result is unspecified, but the
/// call terminates.
inline OracleDecision decide_binary_via_oracle(int n, int k, IndependenceOracle& oracle) {
    require(n == oracle.n(), errc::precondition_violated, "oracle ground set size mismatch");
    require(k >= 1 && k <= n, errc::precondition_violated, "need 1 <= k <= n");
    const auto start = oracle.queries();
    auto finish = [&](Kind verdict) {
        OracleDecision d;
        d.verdict = verdict;
        d.trace.assign(oracle.log().begin() + static_cast<std::ptrdiff_t>(start), oracle.log().end());
        d.queries_used = d.trace.size();
        return d;
    };

    std::vector<std::uint64_t> dependent(static_cast<std::size_t>(n), 0);
    VertexSet seen_independent;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (oracle.independent(VertexSet::of({a, b}))) {
                seen_independent = seen_independent.with(a).with(b);
            } else {
                dependent[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                dependent[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            }
        }
    VertexSet live = seen_independent;
    for (int v = 0; v < n; ++v)
        if (!live.contains(v) && oracle.independent(VertexSet::singleton(v)))
            live = live.with(v);

    const int remaining = live.size();
    if (remaining <= k + 1)
        return finish(Kind::separable);

    const auto dec = group_lines(live, [&](int a, int b) { return (dependent[static_cast<std::size_t>(a)] >> b) & 1U; });
    require(dec.has_value(), errc::oracle_inconsistent, "pair answers are not transitive on lines");

    if (dec->nontrivial_count >= 2)
        return finish(Kind::equatable);
    const auto longest = std::max_element(dec->lines.begin(), dec->lines.end(),
                                          [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    const int l = longest->size();
    if (remaining == l + k - 1)
        return finish(Kind::separable);
    require(remaining >= l + k, errc::oracle_inconsistent,
            "n' < l + k - 1 is impossible for a matroid of rank " + std::to_string(k));
    if (remaining == l + k && l >= 2 && oracle.independent(live - *longest))
        return finish(Kind::separable);
    return finish(Kind::equatable);
}

// ---------------------------------------------------------------------------
// Adversary

struct AdversaryInstance {
    int k = 0;
    Hypergraph h1;   // every k-subset of [2k]
    Hypergraph h2;   // h1 without the complementary pair {f1, f2}
    VertexSet f1;
    VertexSet f2;
};

/// Complete k-uniform h1 on 2k elements and h2 = h1 - {f1, f2} with
/// f1 = [1..k], f2 = [k+1..2k]. Throws Internal if either fails to be a paving
/// matroid or the LP kinds are not separable / equatable.
inline AdversaryInstance build_adversary(int k, const Budgets& budgets = {}) {
    require(k >= 2, errc::precondition_violated, "adversary needs k >= 2");
    require(2 * k <= max_vertices, errc::budget_exceeded, "2k exceeds the ground set limit");
    const int n = 2 * k;
    check_kset_budget(n, k, budgets);
    const auto f1 = VertexSet::full(k);
    const auto f2 = VertexSet::full(n) - f1;
    auto all = all_ksets(n, k);
    std::vector<VertexSet> rest;
    for (auto s : all)
        if (s != f1 && s != f2)
            rest.push_back(s);
    AdversaryInstance inst{k, Hypergraph(Hypergraph::trusted_t{}, n, k, std::move(all)),
                           Hypergraph(Hypergraph::trusted_t{}, n, k, std::move(rest)), f1, f2};

    for (const auto* h : {&inst.h1, &inst.h2}) {
        require(is_matroid(*h), errc::internal, "adversary instance is not a matroid");
        require(is_paving(BasisMatroid(*h)), errc::internal, "adversary instance is not paving");
    }
    require(decide(inst.h1, budgets).kind() == Kind::separable, errc::internal, "h1 should be separable");
    require(decide(inst.h2, budgets).kind() == Kind::equatable, errc::internal, "h2 should be equatable");
    return inst;
}

/// A decision procedure that sees the matroid only through the oracle.
using Strategy = std::function<Kind(IndependenceOracle&)>;

namespace strategies {

inline Strategy query_nothing(Kind answer = Kind::separable) {
    return [answer](IndependenceOracle&) { return answer; };
}

/// Asks about every k-set; separable iff all of them are bases.
inline Strategy query_all_ksets(int n, int k) {
    return [n, k](IndependenceOracle& o) {
        bool all = true;
        for_each_kset(n, k, [&](VertexSet s) { all = o.independent(s) && all; });
        return all ? Kind::separable : Kind::equatable;
    };
}

inline Strategy binary_algorithm(int n, int k) {
    return [n, k](IndependenceOracle& o) { return decide_binary_via_oracle(n, k, o).verdict; };
}

} // namespace strategies

struct IndistinguishabilityReport {
    int k = 0;
    std::optional<Kind> verdict;               // empty when the query budget ran out
    std::size_t queries = 0;
    std::vector<std::pair<VertexSet, bool>> trace;
    std::size_t ksets_queried = 0;
    bool queried_f1_or_f2 = false;
    bool consistent_with_h2 = false;           // replayed trace answers identical under h2
    std::uint64_t complementary_pairs = 0;     // C(2k,k) / 2
    std::uint64_t pairs_touched = 0;           // pairs with at least one member queried
    std::uint64_t query_threshold = 0;         // 2^k - 1
    std::optional<std::pair<VertexSet, VertexSet>> unqueried_pair;
    std::optional<Hypergraph> alternative;     // h1 minus the unqueried pair
    std::optional<Kind> alternative_kind;
    bool alternative_consistent = false;       // trace answer-identical under the alternative
    std::string wrong_on;                      // "h1" or "alternative", when a verdict exists
};

/// Answers of the trace replayed against bases `h` (independence = inside a basis).
inline bool replay_consistent(const Hypergraph& h, const std::vector<std::pair<VertexSet, bool>>& trace) {
    const BasisMatroid m(h);
    for (const auto& [set, answer] : trace)
        if (is_independent(m, set) != answer)
            return false;
    return true;
}

/// Runs the strategy against h1 and reports whether the transcript also fits
/// h2 and which complementary pair was never examined.
inline IndistinguishabilityReport run_indistinguishability_check(const AdversaryInstance& inst, const Strategy& strategy,
                                                                 std::optional<std::size_t> query_budget = std::nullopt,
                                                                 const Budgets& budgets = {}) {
    const int k = inst.k;
    const int n = 2 * k;
    IndependenceOracle oracle(n, [k](VertexSet s) { return s.size() <= k; });
    oracle.set_limit(query_budget);

    IndistinguishabilityReport rep;
    rep.k = k;
    try {
        rep.verdict = strategy(oracle);
    } catch (const error& e) {
        if (e.code() != errc::budget_exceeded)
            throw;
    }
    rep.trace = oracle.log();
    rep.queries = rep.trace.size();

    std::vector<VertexSet> queried_ksets;
    for (const auto& [set, ans] : rep.trace) {
        if (set.size() != k)
            continue;
        queried_ksets.push_back(set);
        rep.queried_f1_or_f2 = rep.queried_f1_or_f2 || set == inst.f1 || set == inst.f2;
    }
    rep.ksets_queried = queried_ksets.size();
    std::sort(queried_ksets.begin(), queried_ksets.end(), BitsLess{});
    auto queried = [&](VertexSet s) { return std::binary_search(queried_ksets.begin(), queried_ksets.end(), s, BitsLess{}); };

    rep.consistent_with_h2 = replay_consistent(inst.h2, rep.trace);
    rep.complementary_pairs = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) / 2;
    rep.query_threshold = (std::uint64_t{1} << k) - 1;

    // Each complementary pair is listed once, by its member containing element 0.
    const auto ground = VertexSet::full(n);
    for_each_subset_of_size(ground.without(0), k - 1, [&](VertexSet rest) {
        const auto a = rest.with(0);
        const auto b = ground - a;
        if (queried(a) || queried(b))
            ++rep.pairs_touched;
        else if (!rep.unqueried_pair)
            rep.unqueried_pair = std::make_pair(a, b);
    });

    if (rep.unqueried_pair) {
        std::vector<VertexSet> rest;
        for_each_kset(n, k, [&](VertexSet s) {
            if (s != rep.unqueried_pair->first && s != rep.unqueried_pair->second)
                rest.push_back(s);
        });
        rep.alternative.emplace(Hypergraph::trusted_t{}, n, k, std::move(rest));
        rep.alternative_kind = decide(*rep.alternative, budgets).kind();
        rep.alternative_consistent = replay_consistent(*rep.alternative, rep.trace);
        if (rep.verdict)
            rep.wrong_on = *rep.verdict == Kind::separable ? "alternative" : "h1";
    }
    return rep;
}

} // namespace sephyp
