#pragma once

// Matroids given by their bases (the edges of a k-hypergraph), plus the
// constructors from GF(2) matrices and multigraphs and the independence oracle
// used by the query-complexity layer.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/vertex_set.hpp"

namespace sephyp {

/// E1, E2 bases and v1 in E1\E2 with no v2 in E2\E1 making E1 - v1 + v2 a basis.
struct ExchangeFailure {
    VertexSet e1;
    VertexSet e2;
    int v1 = 0;
};

/// First basis-exchange failure in lexicographic order of (E1, E2, v1).
inline std::optional<ExchangeFailure> find_exchange_failure(const Hypergraph& h) {
    for (auto e1 : h.edges()) {
        for (auto e2 : h.edges()) {
            if (e1 == e2)
                continue;
            const auto only2 = e2 - e1;
            std::optional<ExchangeFailure> found;
            (e1 - e2).for_each([&](int v1) {
                if (found)
                    return;
                bool ok = false;
                only2.for_each([&](int v2) { ok = ok || h.contains(e1.without(v1).with(v2)); });
                if (!ok)
                    found = ExchangeFailure{e1, e2, v1};
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

inline bool is_matroid(const Hypergraph& h) {
    return h.edge_count() > 0 && !find_exchange_failure(h);
}

/// A Hypergraph whose edges satisfy the basis axioms. Construction validates.
class BasisMatroid {
public:
    explicit BasisMatroid(Hypergraph bases) : carrier_(std::move(bases)) {
        require(carrier_.edge_count() > 0, errc::not_a_matroid, "no bases");
        if (auto f = find_exchange_failure(carrier_))
            fail(errc::not_a_matroid, "exchange fails for E1=" + to_string(f->e1) + " E2=" + to_string(f->e2) +
                                          " v1=" + std::to_string(f->v1 + 1));
    }

    const Hypergraph& carrier() const { return carrier_; }
    int n() const { return carrier_.n(); }
    int k() const { return carrier_.k(); }
    std::span<const VertexSet> bases() const { return carrier_.edges(); }
    bool is_basis(VertexSet s) const { return carrier_.contains(s); }

private:
    Hypergraph carrier_;
};

inline bool is_independent(const BasisMatroid& m, VertexSet s) {
    if (s.size() > m.k())
        return false;
    return std::any_of(m.bases().begin(), m.bases().end(), [&](VertexSet b) { return s.subset_of(b); });
}

/// Elements in no basis.
inline VertexSet loops(const BasisMatroid& m) {
    VertexSet covered;
    for (auto b : m.bases())
        covered = covered | b;
    return m.carrier().ground() - covered;
}

/// Elements in every basis.
inline VertexSet coloops(const BasisMatroid& m) {
    VertexSet common = m.carrier().ground();
    for (auto b : m.bases())
        common = common & b;
    return common;
}

/// A minor on a densely renumbered ground set; original[i] is the 0-based
/// index, in the parent, of new element i.
struct Minor {
    BasisMatroid matroid;
    std::vector<int> original;
};

namespace detail {

/// Removes element v from a set and shifts the elements above it down by one.
inline VertexSet squeeze(VertexSet s, int v) {
    const auto bits = s.bits();
    const auto low = bits & ((std::uint64_t{1} << v) - 1);
    const auto high = v >= 63 ? std::uint64_t{0} : (bits >> (v + 1)) << v;
    return VertexSet(low | high);
}

inline Minor make_minor(const BasisMatroid& m, int v, int k, const std::vector<VertexSet>& bases) {
    const int n = m.n() - 1;
    require(k >= 1 && k < n, errc::rank_collapse,
            "minor would have n=" + std::to_string(n) + " k=" + std::to_string(k));
    std::vector<VertexSet> renamed;
    renamed.reserve(bases.size());
    for (auto b : bases)
        renamed.push_back(squeeze(b, v));
    std::vector<int> original;
    for (int u = 0; u < m.n(); ++u)
        if (u != v)
            original.push_back(u);
    return Minor{BasisMatroid(Hypergraph(n, k, std::move(renamed))), std::move(original)};
}

} // namespace detail

/// Deletion: bases avoiding v, except for a coloop where it equals the contraction.
inline Minor deletion(const BasisMatroid& m, int v) {
    require(v >= 0 && v < m.n(), errc::precondition_violated, "element out of range");
    std::vector<VertexSet> bases;
    int k = m.k();
    if (coloops(m).contains(v)) {
        for (auto b : m.bases())
            bases.push_back(b.without(v));
        --k;
    } else {
        for (auto b : m.bases())
            if (!b.contains(v))
                bases.push_back(b);
    }
    return detail::make_minor(m, v, k, bases);
}

/// Contraction: B - v for bases through v, except for a loop where it equals the deletion.
inline Minor contraction(const BasisMatroid& m, int v) {
    require(v >= 0 && v < m.n(), errc::precondition_violated, "element out of range");
    std::vector<VertexSet> bases;
    int k = m.k();
    if (loops(m).contains(v)) {
        bases.assign(m.bases().begin(), m.bases().end());
    } else {
        for (auto b : m.bases())
            if (b.contains(v))
                bases.push_back(b.without(v));
        --k;
    }
    return detail::make_minor(m, v, k, bases);
}

/// The unique circuit inside e + v, for a basis e and v outside it.
inline VertexSet fundamental_circuit(const BasisMatroid& m, VertexSet e, int v) {
    require(m.is_basis(e), errc::precondition_violated, to_string(e) + " is not a basis");
    require(v >= 0 && v < m.n() && !e.contains(v), errc::precondition_violated, "element must lie outside the basis");
    const auto all = e.with(v);
    std::optional<VertexSet> circuit;
    for (int t = 0; t <= e.size() && !circuit; ++t) {
        for_each_subset_of_size(e, t, [&](VertexSet part) {
            const auto cand = part.with(v);
            if (is_independent(m, cand))
                return true;
            circuit = cand;
            return false;
        });
    }
    require(circuit.has_value(), errc::not_a_matroid, "basis plus element is independent");
    // uniqueness over every subset of e + v
    int count = 0;
    for (int t = 1; t <= all.size(); ++t) {
        for_each_subset_of_size(all, t, [&](VertexSet s) {
            if (is_independent(m, s))
                return;
            bool minimal = true;
            s.for_each([&](int u) { minimal = minimal && is_independent(m, s.without(u)); });
            count += minimal;
        });
    }
    require(count == 1, errc::not_a_matroid, "basis plus element holds " + std::to_string(count) + " circuits");
    return *circuit;
}

inline void check_subset_budget(int n, const Budgets& budgets) {
    require(static_cast<std::uint64_t>(n) <= budgets.subset_exponent, errc::budget_exceeded,
            "2^" + std::to_string(n) + " subsets exceed budget 2^" + std::to_string(budgets.subset_exponent));
}

/// All minimal dependent sets, by size then lexicographically. No circuit has
/// more than k + 1 elements.
inline std::vector<VertexSet> circuits(const BasisMatroid& m, const Budgets& budgets = {}) {
    check_subset_budget(m.n(), budgets);
    std::vector<VertexSet> out;
    for (int t = 1; t <= m.k() + 1 && t <= m.n(); ++t) {
        for_each_kset(m.n(), t, [&](VertexSet s) {
            if (is_independent(m, s))
                return;
            bool minimal = true;
            s.for_each([&](int u) { minimal = minimal && is_independent(m, s.without(u)); });
            if (minimal)
                out.push_back(s);
        });
    }
    return out;
}

/// Every (k-1)-subset independent.
inline bool is_paving(const BasisMatroid& m) {
    return for_each_kset(m.n(), m.k() - 1, [&](VertexSet s) { return is_independent(m, s); });
}

namespace detail {

inline bool splits_into_circuits(VertexSet rest, const std::vector<VertexSet>& circs) {
    if (rest.empty())
        return true;
    const int v = rest.lowest();
    for (auto c : circs)
        if (c.contains(v) && c.subset_of(rest) && splits_into_circuits(rest - c, circs))
            return true;
    return false;
}

} // namespace detail

/// Symmetric difference of every two distinct circuits is a disjoint union of circuits.
inline bool is_binary(const BasisMatroid& m, const Budgets& budgets = {}) {
    const auto circs = circuits(m, budgets);
    for (std::size_t i = 0; i < circs.size(); ++i)
        for (std::size_t j = i + 1; j < circs.size(); ++j)
            if (!detail::splits_into_circuits(circs[i] ^ circs[j], circs))
                return false;
    return true;
}

struct LineDecomposition {
    std::vector<VertexSet> lines;   // ordered by smallest element
    int nontrivial_count = 0;

    std::size_t max_line_size() const {
        std::size_t best = 0;
        for (auto l : lines)
            best = std::max(best, static_cast<std::size_t>(l.size()));
        return best;
    }
};

/// Groups elements of `ground` by a pairwise-dependence predicate and checks
/// that the relation is an equivalence (it is, in any loopless matroid).
template <typename DependentPair>
std::optional<LineDecomposition> group_lines(VertexSet ground, DependentPair&& dependent) {
    LineDecomposition out;
    VertexSet left = ground;
    while (!left.empty()) {
        const int v = left.lowest();
        VertexSet line = VertexSet::singleton(v);
        left.without(v).for_each([&](int u) {
            if (dependent(v, u))
                line = line.with(u);
        });
        // dependent inside the line, independent across it
        bool closed = true;
        line.for_each([&](int a) {
            left.for_each([&](int b) {
                if (a != b && dependent(a, b) != line.contains(b))
                    closed = false;
            });
        });
        if (!closed)
            return std::nullopt;
        out.lines.push_back(line);
        out.nontrivial_count += line.size() >= 2;
        left = left - line;
    }
    return out;
}

inline LineDecomposition lines(const BasisMatroid& m) {
    const auto l = loops(m);
    require(l.empty(), errc::has_loops, "matroid has loops " + to_string(l));
    auto dec = group_lines(m.carrier().ground(),
                           [&](int a, int b) { return !is_independent(m, VertexSet::of({a, b})); });
    require(dec.has_value(), errc::not_a_matroid, "pairwise dependence is not transitive");
    return *dec;
}

/// I + J for the lexicographically first J inside e \ i that completes a basis.
inline VertexSet augment(const BasisMatroid& m, VertexSet independent, VertexSet basis) {
    require(is_independent(m, independent), errc::precondition_violated, to_string(independent) + " is dependent");
    require(m.is_basis(basis), errc::precondition_violated, to_string(basis) + " is not a basis");
    std::optional<VertexSet> found;
    for_each_subset_of_size(basis - independent, m.k() - independent.size(), [&](VertexSet j) {
        if (!m.is_basis(independent | j))
            return true;
        found = independent | j;
        return false;
    });
    require(found.has_value(), errc::not_a_matroid, "augmentation failed");
    return *found;
}

// ---------------------------------------------------------------------------
// Independence oracle

/// Black-box independence with a cache and an ordered log of distinct queries.
/// Repeated queries are answered from the cache and not counted. Single consumer.
class IndependenceOracle {
public:
    using Query = std::function<bool(VertexSet)>;

    IndependenceOracle(int n, Query query) : n_(n), query_(std::move(query)) {}

    int n() const { return n_; }

    bool independent(VertexSet s) {
        require(s.subset_of(VertexSet::full(n_)), errc::precondition_violated, "query outside the ground set");
        if (auto it = cache_.find(s.bits()); it != cache_.end())
            return it->second;
        require(!limit_ || log_.size() < *limit_, errc::budget_exceeded,
                "oracle query limit " + std::to_string(limit_.value_or(0)) + " reached");
        const bool ans = query_(s);
        cache_.emplace(s.bits(), ans);
        log_.emplace_back(s, ans);
        return ans;
    }

    std::size_t queries() const { return log_.size(); }
    const std::vector<std::pair<VertexSet, bool>>& log() const { return log_; }
    void set_limit(std::optional<std::size_t> limit) { limit_ = limit; }

private:
    int n_;
    Query query_;
    std::unordered_map<std::uint64_t, bool> cache_;
    std::vector<std::pair<VertexSet, bool>> log_;
    std::optional<std::size_t> limit_;
};

/// Bases = all k-sets accepted by the predicate.
template <typename Independent>
Hypergraph materialize_bases(int n, int k, Independent&& independent, const Budgets& budgets) {
    require(k >= 1, errc::rank_collapse, "rank 0");
    require(k < n, errc::rank_collapse, "rank equals the ground set size");
    check_kset_budget(n, k, budgets);
    std::vector<VertexSet> bases;
    for_each_kset(n, k, [&](VertexSet s) {
        if (independent(s))
            bases.push_back(s);
    });
    return Hypergraph(Hypergraph::trusted_t{}, n, k, std::move(bases));
}

// ---------------------------------------------------------------------------
// GF(2) matrices

struct Gf2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> columns;   // bit r of columns[c] is entry (r, c)

    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& bits) {
        Gf2Matrix m;
        m.rows = static_cast<int>(bits.size());
        m.cols = bits.empty() ? 0 : static_cast<int>(bits.front().size());
        require(m.rows >= 1 && m.rows <= 64 && m.cols >= 1 && m.cols <= max_vertices, errc::invalid_input,
                "matrix must have 1..64 rows and 1..64 columns");
        m.columns.assign(static_cast<std::size_t>(m.cols), 0);
        for (int r = 0; r < m.rows; ++r) {
            const auto& row = bits[static_cast<std::size_t>(r)];
            require(static_cast<int>(row.size()) == m.cols, errc::invalid_input, "ragged matrix rows");
            for (int c = 0; c < m.cols; ++c) {
                const int b = row[static_cast<std::size_t>(c)];
                require(b == 0 || b == 1, errc::invalid_input, "matrix entries must be 0 or 1");
                if (b)
                    m.columns[static_cast<std::size_t>(c)] |= std::uint64_t{1} << r;
            }
        }
        return m;
    }

    /// Rank over GF(2) of the selected columns.
    int rank(VertexSet cols_subset) const {
        std::vector<std::uint64_t> basis;   // reduced vectors with distinct leading bits
        int rank = 0;
        cols_subset.for_each([&](int c) {
            auto v = columns[static_cast<std::size_t>(c)];
            for (auto b : basis)
                v = std::min(v, v ^ b);
            if (v != 0) {
                basis.push_back(v);
                std::sort(basis.begin(), basis.end(), std::greater<>());
                ++rank;
            }
        });
        return rank;
    }

    int rank() const { return rank(VertexSet::full(cols)); }
    bool independent(VertexSet s) const { return rank(s) == s.size(); }
};

inline IndependenceOracle make_oracle(const Gf2Matrix& mat) {
    return IndependenceOracle(mat.cols, [mat](VertexSet s) { return mat.independent(s); });
}

struct Representation {
    BasisMatroid matroid;
    IndependenceOracle oracle;
};

/// Bases are the column sets of full rank; RankCollapse when rank = #columns.
inline Representation from_gf2_matrix(const Gf2Matrix& mat, const Budgets& budgets = {}) {
    const int k = mat.rank();
    require(k >= 1, errc::rank_zero, "matrix has rank 0");
    auto bases = materialize_bases(mat.cols, k, [&](VertexSet s) { return mat.independent(s); }, budgets);
    return Representation{BasisMatroid(std::move(bases)), make_oracle(mat)};
}

// ---------------------------------------------------------------------------
// Graphic matroids

/// Multigraph on vertices 0..vertices-1; parallel edges and self-loops allowed.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    /// Acyclicity of the selected edges.
    bool is_forest(VertexSet edge_subset) const {
        return spanning_rank(edge_subset) == edge_subset.size();
    }

    /// Size of a spanning forest of the selected edges.
    int spanning_rank(VertexSet edge_subset) const {
        std::vector<int> parent(static_cast<std::size_t>(vertices));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        int r = 0;
        edge_subset.for_each([&](int e) {
            const auto [u, v] = edges[static_cast<std::size_t>(e)];
            const int a = find(u), b = find(v);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                ++r;
            }
        });
        return r;
    }

    /// #vertices - #components.
    int rank() const { return spanning_rank(VertexSet::full(static_cast<int>(edges.size()))); }
};

inline IndependenceOracle make_oracle(const Graph& g) {
    return IndependenceOracle(static_cast<int>(g.edges.size()), [g](VertexSet s) { return g.is_forest(s); });
}

/// Ground set = edges in input order; bases = maximal spanning forests.
inline BasisMatroid from_graph(const Graph& g, const Budgets& budgets = {}) {
    require(!g.edges.empty(), errc::invalid_input, "graph has no edges");
    require(static_cast<int>(g.edges.size()) <= max_vertices, errc::invalid_input, "too many edges");
    for (auto [u, v] : g.edges)
        require(u >= 0 && u < g.vertices && v >= 0 && v < g.vertices, errc::invalid_input, "edge endpoint out of range");
    const int n = static_cast<int>(g.edges.size());
    const int k = g.rank();
    require(k >= 1 && k < n, errc::rank_collapse,
            "graphic matroid has rank " + std::to_string(k) + " on " + std::to_string(n) + " edges");
    return BasisMatroid(materialize_bases(n, k, [&](VertexSet s) { return g.is_forest(s); }, budgets));
}

} // namespace sephyp
