#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/vertex_set.hpp"

namespace sephyp {

/// A k-uniform hypergraph on vertices {0..n-1} with 1 <= k < n.
///
/// Immutable. Edges are kept in lexicographic order; a second copy sorted by
/// bit pattern serves membership queries.
class Hypergraph {
public:
    /// Validates every invariant; duplicate edges are an error, not deduplicated.
    Hypergraph(int n, int k, std::vector<VertexSet> edges) : n_(n), k_(k), edges_(std::move(edges)) {
        require(k >= 1 && k < n, errc::invalid_input,
                "need 1 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
        require(n <= max_vertices, errc::invalid_input, "n exceeds " + std::to_string(max_vertices));
        const auto ground = VertexSet::full(n);
        for (auto e : edges_) {
            require(e.size() == k && e.subset_of(ground), errc::invalid_input,
                    "edge " + to_string(e) + " is not a " + std::to_string(k) + "-subset of [" +
                        std::to_string(n) + "]");
        }
        std::sort(edges_.begin(), edges_.end(), LexLess{});
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        require(dup == edges_.end(), errc::invalid_input, "duplicate edge " + (dup == edges_.end() ? std::string{} : to_string(*dup)));
        build_lookup();
    }

    /// 1-based edge lists; each edge is canonicalized by sorting.
    static Hypergraph from_one_based(int n, int k, const std::vector<std::vector<int>>& edges) {
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (const auto& e : edges) {
            VertexSet s;
            for (int v : e) {
                require(v >= 1 && v <= n, errc::invalid_input, "vertex " + std::to_string(v) + " out of range");
                require(!s.contains(v - 1), errc::invalid_input, "repeated vertex " + std::to_string(v));
                s = s.with(v - 1);
            }
            sets.push_back(s);
        }
        return Hypergraph(n, k, std::move(sets));
    }

    int n() const { return n_; }
    int k() const { return k_; }
    VertexSet ground() const { return VertexSet::full(n_); }
    std::span<const VertexSet> edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool contains(VertexSet s) const {
        return std::binary_search(lookup_.begin(), lookup_.end(), s, BitsLess{});
    }

    std::vector<std::vector<int>> one_based_edges() const {
        std::vector<std::vector<int>> out;
        out.reserve(edges_.size());
        for (auto e : edges_)
            out.push_back(e.one_based());
        return out;
    }

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_; }

    /// For producers that already hold distinct, valid, lex-sorted edges.
    struct trusted_t {};
    Hypergraph(trusted_t, int n, int k, std::vector<VertexSet> sorted_edges)
        : n_(n), k_(k), edges_(std::move(sorted_edges)) {
        build_lookup();
    }

private:
    void build_lookup() {
        lookup_ = edges_;
        std::sort(lookup_.begin(), lookup_.end(), BitsLess{});
    }

    int n_;
    int k_;
    std::vector<VertexSet> edges_;
    std::vector<VertexSet> lookup_;
};

inline void check_kset_budget(int n, int k, const Budgets& budgets) {
    const auto count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    require(count <= budgets.ksets, errc::budget_exceeded,
            "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(count) +
                " k-sets exceeds budget " + std::to_string(budgets.ksets));
}

/// All k-sets of the ground set that are not edges.
inline Hypergraph complement(const Hypergraph& h, const Budgets& budgets = {}) {
    check_kset_budget(h.n(), h.k(), budgets);
    std::vector<VertexSet> out;
    for_each_kset(h.n(), h.k(), [&](VertexSet s) {
        if (!h.contains(s))
            out.push_back(s);
    });
    return Hypergraph(Hypergraph::trusted_t{}, h.n(), h.k(), std::move(out));
}

/// The (n-k)-uniform hypergraph of edge complements V \ E.
inline Hypergraph dual(const Hypergraph& h) {
    std::vector<VertexSet> out;
    out.reserve(h.edge_count());
    for (auto e : h.edges())
        out.push_back(h.ground() - e);
    return Hypergraph(h.n(), h.n() - h.k(), std::move(out));
}

/// Deterministic stream over every subset of a fixed candidate family of
/// k-sets (by default all of them). Instance i contains candidate j iff bit j
/// of i is set; candidates are in lexicographic order.
class HypergraphEnumerator {
public:
    HypergraphEnumerator(int n, int k, const Budgets& budgets = {})
        : HypergraphEnumerator(n, k, candidates_checked(n, k, budgets), budgets) {}

    HypergraphEnumerator(int n, int k, std::vector<VertexSet> candidates, const Budgets& budgets = {})
        : n_(n), k_(k), candidates_(std::move(candidates)) {
        require(k >= 1 && k < n, errc::invalid_input, "need 1 <= k < n");
        require(candidates_.size() <= budgets.enumeration_exponent && candidates_.size() < 64,
                errc::budget_exceeded,
                std::to_string(candidates_.size()) + " candidate k-sets exceed enumeration budget 2^" +
                    std::to_string(budgets.enumeration_exponent));
        std::sort(candidates_.begin(), candidates_.end(), LexLess{});
        for (auto c : candidates_)
            require(c.size() == k && c.subset_of(VertexSet::full(n)), errc::invalid_input, "bad candidate k-set");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t size() const { return std::uint64_t{1} << candidates_.size(); }
    std::span<const VertexSet> candidates() const { return candidates_; }

    Hypergraph at(std::uint64_t index) const {
        std::vector<VertexSet> edges;
        for (std::size_t j = 0; j < candidates_.size(); ++j)
            if ((index >> j) & 1U)
                edges.push_back(candidates_[j]);
        return Hypergraph(Hypergraph::trusted_t{}, n_, k_, std::move(edges));
    }

    std::optional<Hypergraph> next() {
        if (cursor_ >= size())
            return std::nullopt;
        return at(cursor_++);
    }

private:
    static std::vector<VertexSet> candidates_checked(int n, int k, const Budgets& budgets) {
        require(k >= 1 && k < n && n <= max_vertices, errc::invalid_input, "need 1 <= k < n");
        const auto count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
        require(count <= budgets.enumeration_exponent, errc::budget_exceeded,
                "2^C(" + std::to_string(n) + "," + std::to_string(k) + ") = 2^" + std::to_string(count) +
                    " instances exceed budget 2^" + std::to_string(budgets.enumeration_exponent));
        return all_ksets(n, k);
    }

    int n_;
    int k_;
    std::vector<VertexSet> candidates_;
    std::uint64_t cursor_ = 0;
};

} // namespace sephyp
