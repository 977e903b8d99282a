#pragma once

// Purely combinatorial predicates on k-hypergraphs: exchangeability, summable
// quadruples, r-monotonicity, multipartiteness and graph orderability. Every
// search is deterministic and lexicographic so fixtures are stable.

#include <optional>
#include <string>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/vertex_set.hpp"

namespace sephyp {

/// Edges e1, e2 with v1 in e1\e2, v2 in e2\e1 whose two swaps are both non-edges.
struct ExchangeWitness {
    VertexSet e1;
    VertexSet e2;
    int v1 = 0;
    int v2 = 0;

    VertexSet swapped1() const { return e1.without(v1).with(v2); }
    VertexSet swapped2() const { return e2.without(v2).with(v1); }
    bool operator==(const ExchangeWitness&) const = default;
};

/// Edges e1, e2 and non-edges f1, f2 with equal pairwise intersection and union.
struct SummableQuadruple {
    VertexSet e1;
    VertexSet e2;
    VertexSet f1;
    VertexSet f2;
    bool operator==(const SummableQuadruple&) const = default;
};

inline bool is_valid_witness(const Hypergraph& h, const ExchangeWitness& w) {
    return h.contains(w.e1) && h.contains(w.e2) && w.e1.contains(w.v1) && !w.e2.contains(w.v1) &&
           w.e2.contains(w.v2) && !w.e1.contains(w.v2) && !h.contains(w.swapped1()) && !h.contains(w.swapped2());
}

inline bool is_valid_quadruple(const Hypergraph& h, const SummableQuadruple& q) {
    const bool same_pair = (q.e1 == q.f1 && q.e2 == q.f2) || (q.e1 == q.f2 && q.e2 == q.f1);
    return h.contains(q.e1) && h.contains(q.e2) && q.f1.size() == h.k() && q.f2.size() == h.k() &&
           q.f1.subset_of(h.ground()) && q.f2.subset_of(h.ground()) && !h.contains(q.f1) &&
           !h.contains(q.f2) && (q.e1 & q.e2) == (q.f1 & q.f2) && (q.e1 | q.e2) == (q.f1 | q.f2) && !same_pair;
}

/// First exchange witness in lexicographic order of (e1, e2, v1, v2), e1 < e2.
inline std::optional<ExchangeWitness> is_exchangeable(const Hypergraph& h) {
    const auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto e1 = edges[i];
            const auto e2 = edges[j];
            const auto only1 = e1 - e2;
            const auto only2 = e2 - e1;
            std::optional<ExchangeWitness> found;
            only1.for_each([&](int v1) {
                if (found)
                    return;
                only2.for_each([&](int v2) {
                    if (found)
                        return;
                    if (!h.contains(e1.without(v1).with(v2)) && !h.contains(e2.without(v2).with(v1)))
                        found = ExchangeWitness{e1, e2, v1, v2};
                });
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

/// The quadruple (E1, E2, E1-v1+v2, E2-v2+v1) induced by an exchange witness.
inline SummableQuadruple quadruple_from_witness(const ExchangeWitness& w) {
    return {w.e1, w.e2, w.swapped1(), w.swapped2()};
}

/// First quadruple in lexicographic order of (e1, e2, f1) with e1 < e2, f1 < f2.
///
/// For an edge pair with intersection I and symmetric part D, the candidates
/// are exactly f1 = I + A, f2 = I + (D - A) for |A| = |D|/2.
inline std::optional<SummableQuadruple> find_summable_quadruple(const Hypergraph& h) {
    const auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto e1 = edges[i];
            const auto e2 = edges[j];
            const auto common = e1 & e2;
            const auto sym = e1 ^ e2;
            std::optional<SummableQuadruple> found;
            for_each_subset_of_size(sym, sym.size() / 2, [&](VertexSet half) {
                const auto f1 = common | half;
                const auto f2 = common | (sym - half);
                if (!lex_less(f1, f2) || h.contains(f1) || h.contains(f2))
                    return true;
                found = SummableQuadruple{e1, e2, f1, f2};
                return false;
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

/// R1 <= R2: S+R1 in H implies S+R2 in H for every S outside R1+R2 of size k-|R1|.
inline bool monotone_leq(const Hypergraph& h, VertexSet r1, VertexSet r2) {
    const int s = h.k() - r1.size();
    if (s < 0)
        return true;
    const auto outside = h.ground() - (r1 | r2);
    return for_each_subset_of_size(outside, s, [&](VertexSet rest) {
        return !(h.contains(rest | r1) && !h.contains(rest | r2));
    });
}

/// Uniform r-monotonicity by full enumeration of R1, R2 and S.
inline bool is_r_monotone(const Hypergraph& h, int r, const Budgets& budgets = {}) {
    require(r >= 1 && r <= h.n(), errc::invalid_input, "need 1 <= r <= n, got r=" + std::to_string(r));
    const auto c = binomial(static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(r));
    const bool overflow = c != 0 && c > budgets.monotone_pairs / c;
    require(!overflow && c * c <= budgets.monotone_pairs, errc::budget_exceeded,
            "C(n,r)^2 exceeds the monotone budget " + std::to_string(budgets.monotone_pairs));
    for (int t = 1; t <= r; ++t) {
        const auto sets = all_ksets(h.n(), t);
        for (std::size_t a = 0; a < sets.size(); ++a) {
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                if ((sets[a] | sets[b]).size() > r)
                    continue;
                if (!monotone_leq(h, sets[a], sets[b]) && !monotone_leq(h, sets[b], sets[a]))
                    return false;
            }
        }
    }
    return true;
}

struct Partition {
    std::vector<VertexSet> parts;
};

/// Throws InvalidPartition unless the parts are k nonempty disjoint sets covering [n].
inline void validate_partition(const Partition& p, int n, int k) {
    require(static_cast<int>(p.parts.size()) == k, errc::invalid_partition,
            "expected " + std::to_string(k) + " parts, got " + std::to_string(p.parts.size()));
    VertexSet seen;
    for (auto part : p.parts) {
        require(!part.empty(), errc::invalid_partition, "empty part");
        require(part.subset_of(VertexSet::full(n)), errc::invalid_partition, "part " + to_string(part) + " leaves [n]");
        require(seen.disjoint(part), errc::invalid_partition, "part " + to_string(part) + " overlaps another part");
        seen = seen | part;
    }
    require(seen == VertexSet::full(n), errc::invalid_partition, "parts do not cover all vertices");
}

inline bool is_multipartite(const Hypergraph& h, const Partition& p) {
    validate_partition(p, h.n(), h.k());
    for (auto e : h.edges())
        for (auto part : p.parts)
            if ((e & part).size() != 1)
                return false;
    return true;
}

/// k consecutive blocks of sizes differing by at most one, larger blocks first.
inline Partition balanced_partition(int n, int k) {
    Partition p;
    int next = 0;
    for (int i = 0; i < k; ++i) {
        const int size = n / k + (i < n % k ? 1 : 0);
        VertexSet part;
        for (int j = 0; j < size; ++j)
            part = part.with(next++);
        p.parts.push_back(part);
    }
    return p;
}

/// All k-sets meeting every part exactly once (lexicographic order).
inline std::vector<VertexSet> transversals(const Partition& p, int n, int k) {
    std::vector<VertexSet> out;
    for_each_kset(n, k, [&](VertexSet s) {
        for (auto part : p.parts)
            if ((s & part).size() != 1)
                return;
        out.push_back(s);
    });
    return out;
}

enum class OrderTag { isolated, dominating };

/// order[j] is the vertex at position j; tags[j] its relation to positions < j.
struct GraphOrdering {
    std::vector<int> order;
    std::vector<OrderTag> tags;
};

inline std::vector<VertexSet> neighbourhoods(const Hypergraph& h) {
    std::vector<VertexSet> nbr(static_cast<std::size_t>(h.n()));
    for (auto e : h.edges()) {
        const int a = e.lowest();
        const int b = e.highest();
        nbr[static_cast<std::size_t>(a)] = nbr[static_cast<std::size_t>(a)].with(b);
        nbr[static_cast<std::size_t>(b)] = nbr[static_cast<std::size_t>(b)].with(a);
    }
    return nbr;
}

inline bool is_valid_ordering(const Hypergraph& h, const GraphOrdering& o) {
    if (h.k() != 2 || o.order.size() != static_cast<std::size_t>(h.n()) || o.tags.size() != o.order.size())
        return false;
    VertexSet seen;
    for (int v : o.order) {
        if (v < 0 || v >= h.n() || seen.contains(v))
            return false;
        seen = seen.with(v);
    }
    for (std::size_t j = 0; j < o.order.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const bool edge = h.contains(VertexSet::of({o.order[i], o.order[j]}));
            if (edge != (o.tags[j] == OrderTag::dominating))
                return false;
        }
    }
    return true;
}

/// Greedy isolated/dominating elimination from the back of the order. Prefers
/// the smallest isolated vertex, then the smallest dominating one.
inline std::optional<GraphOrdering> graph_orderable(const Hypergraph& h) {
    require(h.k() == 2, errc::not_a_graph, "orderability needs k = 2, got k=" + std::to_string(h.k()));
    const auto nbr = neighbourhoods(h);
    const auto n = static_cast<std::size_t>(h.n());
    GraphOrdering out{std::vector<int>(n), std::vector<OrderTag>(n)};
    VertexSet remaining = h.ground();
    for (std::size_t pos = n; pos-- > 0;) {
        int pick = -1;
        OrderTag tag = OrderTag::isolated;
        remaining.for_each([&](int v) {
            if (pick < 0 && nbr[static_cast<std::size_t>(v)].disjoint(remaining))
                pick = v;
        });
        if (pick < 0) {
            remaining.for_each([&](int v) {
                if (pick < 0 && remaining.without(v).subset_of(nbr[static_cast<std::size_t>(v)]))
                    pick = v;
            });
            tag = OrderTag::dominating;
        }
        if (pick < 0)
            return std::nullopt;
        out.order[pos] = pick;
        out.tags[pos] = tag;
        remaining = remaining.without(pick);
    }
    return out;
}

} // namespace sephyp
