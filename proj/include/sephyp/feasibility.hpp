#pragma once

// Separable vs. equatable: the Farkas alternative between
//   A x <= b                          (a separating vertex labeling x)
//   y >= 0,  y^T A = 0,  y^T b < 0    (a balancing k-set labeling y)
// where row G of A is -1 on the members of an edge G, +1 on the members of a
// non-edge G, and b_G is 0 for edges and -1 for non-edges.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/hypercore.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/rational.hpp"
#include "sephyp/simplex.hpp"
#include "sephyp/vertex_set.hpp"

namespace sephyp {

enum class Kind { separable, equatable };

constexpr std::string_view to_string(Kind k) { return k == Kind::separable ? "separable" : "equatable"; }

/// x : V -> Q, one value per vertex.
struct VertexLabeling {
    std::vector<Rational> values;
};

/// Sparse y on k-sets. Verification, not construction, enforces y >= 0, y != 0.
struct SetLabeling {
    std::vector<std::pair<VertexSet, Rational>> entries;

    Rational at(VertexSet s) const {
        for (const auto& [set, val] : entries)
            if (set == s)
                return val;
        return Rational(0);
    }
    std::size_t support() const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const auto& e) { return sgn(e.second) != 0; }));
    }
};

class Certificate {
public:
    explicit Certificate(VertexLabeling x) : data_(std::move(x)) {}
    explicit Certificate(SetLabeling y) : data_(std::move(y)) {}

    Kind kind() const { return std::holds_alternative<VertexLabeling>(data_) ? Kind::separable : Kind::equatable; }
    const VertexLabeling& x() const { return std::get<VertexLabeling>(data_); }
    const SetLabeling& y() const { return std::get<SetLabeling>(data_); }

private:
    std::variant<VertexLabeling, SetLabeling> data_;
};

/// Rows are all k-subsets in lexicographic order, columns the n vertices.
struct FarkasSystem {
    int n = 0;
    int k = 0;
    std::vector<VertexSet> row_sets;
    std::vector<int> a;   // row-major, entries in {-1, 0, +1}
    std::vector<int> b;   // entries in {0, -1}

    std::size_t rows() const { return row_sets.size(); }
    int at(std::size_t row, int v) const { return a[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; }
};

inline void check_row_budget(int n, int k, const Budgets& budgets) {
    const auto rows = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    require(rows <= budgets.lp_rows, errc::budget_exceeded,
            "C(n,k) = " + std::to_string(rows) + " rows exceed the LP budget " + std::to_string(budgets.lp_rows));
}

inline FarkasSystem build_system(const Hypergraph& h, const Budgets& budgets = {}) {
    check_row_budget(h.n(), h.k(), budgets);
    FarkasSystem sys;
    sys.n = h.n();
    sys.k = h.k();
    sys.row_sets = all_ksets(h.n(), h.k());
    sys.a.assign(sys.row_sets.size() * static_cast<std::size_t>(h.n()), 0);
    sys.b.assign(sys.row_sets.size(), 0);
    for (std::size_t i = 0; i < sys.row_sets.size(); ++i) {
        const auto g = sys.row_sets[i];
        const bool edge = h.contains(g);
        g.for_each([&](int v) { sys.a[i * static_cast<std::size_t>(h.n()) + static_cast<std::size_t>(v)] = edge ? -1 : 1; });
        sys.b[i] = edge ? 0 : -1;
    }
    return sys;
}

// ---------------------------------------------------------------------------
// Verification

inline Rational label_sum(const VertexLabeling& x, VertexSet s) {
    Rational sum(0);
    s.for_each([&](int v) { sum += x.values[static_cast<std::size_t>(v)]; });
    return sum;
}

/// First k-set (lexicographic) where membership disagrees with x(E) >= 0.
inline std::optional<std::string> find_separation_violation(const Hypergraph& h, const VertexLabeling& x) {
    if (x.values.size() != static_cast<std::size_t>(h.n()))
        return "labeling has " + std::to_string(x.values.size()) + " values for " + std::to_string(h.n()) + " vertices";
    std::optional<std::string> found;
    for_each_kset(h.n(), h.k(), [&](VertexSet s) {
        const auto sum = label_sum(x, s);
        const bool edge = h.contains(s);
        if (edge == (sgn(sum) >= 0))
            return true;
        found = edge ? "edge " + to_string(s) + " has x-sum " + format_rational(sum) + " < 0"
                     : "non-edge " + to_string(s) + " has x-sum " + format_rational(sum) + " >= 0";
        return false;
    });
    return found;
}

inline bool verify_separating(const Hypergraph& h, const VertexLabeling& x) {
    return !find_separation_violation(h, x);
}

/// Checks y >= 0, y != 0 and the per-vertex balance; reports the first failure.
inline std::optional<std::string> find_equatable_violation(const Hypergraph& h, const SetLabeling& y) {
    std::vector<VertexSet> keys;
    bool positive = false;
    for (const auto& [set, val] : y.entries) {
        if (set.size() != h.k() || !set.subset_of(h.ground()))
            return "key " + to_string(set) + " is not a " + std::to_string(h.k()) + "-subset of the ground set";
        if (sgn(val) < 0)
            return "negative label " + format_rational(val) + " on " + to_string(set);
        positive = positive || sgn(val) > 0;
        keys.push_back(set);
    }
    std::sort(keys.begin(), keys.end(), BitsLess{});
    if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end())
        return "set " + to_string(*dup) + " labeled twice";
    if (!positive)
        return std::string("labeling is identically zero");
    for (int v = 0; v < h.n(); ++v) {
        Rational edge_mass(0), non_edge_mass(0);
        for (const auto& [set, val] : y.entries) {
            if (!set.contains(v))
                continue;
            (h.contains(set) ? edge_mass : non_edge_mass) += val;
        }
        if (edge_mass != non_edge_mass)
            return "vertex " + std::to_string(v + 1) + ": edge mass " + format_rational(edge_mass) +
                   " != non-edge mass " + format_rational(non_edge_mass);
    }
    return std::nullopt;
}

inline bool verify_equatable(const Hypergraph& h, const SetLabeling& y) {
    return !find_equatable_violation(h, y);
}

inline std::optional<std::string> find_certificate_violation(const Hypergraph& h, const Certificate& c) {
    return c.kind() == Kind::separable ? find_separation_violation(h, c.x()) : find_equatable_violation(h, c.y());
}

inline bool verify_certificate(const Hypergraph& h, const Certificate& c) {
    return !find_certificate_violation(h, c);
}

// ---------------------------------------------------------------------------
// Normalization

namespace detail {

/// Scales a rational vector by a positive constant to the primitive integer vector.
inline void make_primitive(std::vector<Rational*>& vals) {
    Integer den_lcm(1);
    bool nonzero = false;
    for (auto* r : vals) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r->get_den_mpz_t());
        nonzero = nonzero || sgn(*r) != 0;
    }
    if (!nonzero)
        return;
    Integer g(0);
    for (auto* r : vals) {
        *r *= den_lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r->get_num_mpz_t());
    }
    for (auto* r : vals)
        *r /= g;
}

} // namespace detail

inline VertexLabeling normalized(VertexLabeling x) {
    std::vector<Rational*> ptrs;
    for (auto& v : x.values)
        ptrs.push_back(&v);
    detail::make_primitive(ptrs);
    return x;
}

/// Drops zeros, sorts keys lexicographically, scales to the primitive integer vector.
inline SetLabeling normalized(SetLabeling y) {
    std::erase_if(y.entries, [](const auto& e) { return sgn(e.second) == 0; });
    std::sort(y.entries.begin(), y.entries.end(), [](const auto& l, const auto& r) { return lex_less(l.first, r.first); });
    std::vector<Rational*> ptrs;
    for (auto& [set, val] : y.entries)
        ptrs.push_back(&val);
    detail::make_primitive(ptrs);
    return y;
}

// ---------------------------------------------------------------------------
// Decision

/// Exact LP decision with a self-checked, normalized certificate.
inline Certificate decide(const Hypergraph& h, const Budgets& budgets = {}) {
    const auto sys = build_system(h, budgets);
    detail::DenseSystem dense{sys.rows(), static_cast<std::size_t>(sys.n), sys.a, sys.b};
    auto res = detail::solve_phase_one(dense);
    std::optional<Certificate> cert;
    if (res.feasible) {
        cert.emplace(normalized(VertexLabeling{std::move(res.x)}));
    } else {
        SetLabeling y;
        for (std::size_t i = 0; i < sys.rows(); ++i)
            if (sgn(res.y[i]) != 0)
                y.entries.emplace_back(sys.row_sets[i], res.y[i]);
        cert.emplace(normalized(std::move(y)));
    }
    if (auto bad = find_certificate_violation(h, *cert))
        fail(errc::internal, "LP certificate failed verification: " + *bad);
    return *cert;
}

/// y*(V \ E) := y(E); balances dual(h) whenever y balances h.
inline SetLabeling dual_labeling(const Hypergraph& h, const SetLabeling& y) {
    SetLabeling out;
    for (const auto& [set, val] : y.entries)
        out.entries.emplace_back(h.ground() - set, val);
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& l, const auto& r) { return lex_less(l.first, r.first); });
    return out;
}

/// 1 on each of the four sets.
inline SetLabeling labeling_from_quadruple(const SummableQuadruple& q) {
    SetLabeling y;
    for (auto s : {q.e1, q.e2, q.f1, q.f2})
        y.entries.emplace_back(s, Rational(1));
    std::sort(y.entries.begin(), y.entries.end(), [](const auto& l, const auto& r) { return lex_less(l.first, r.first); });
    return y;
}

// ---------------------------------------------------------------------------
// 0/1 certificates with bounded support

namespace detail {

class BinaryCertificateSearch {
public:
    BinaryCertificateSearch(const Hypergraph& h) : h_(h), sets_(all_ksets(h.n(), h.k())) {
        is_edge_.reserve(sets_.size());
        low_.reserve(sets_.size());
        for (auto s : sets_) {
            is_edge_.push_back(h.contains(s));
            low_.push_back(s.lowest());
        }
        balance_.assign(static_cast<std::size_t>(h.n()), 0);
    }

    std::optional<std::vector<VertexSet>> run(int support) {
        if (support % 2 != 0 || support > static_cast<int>(sets_.size()))
            return std::nullopt;
        target_ = support;
        chosen_.clear();
        edges_ = non_edges_ = 0;
        std::fill(balance_.begin(), balance_.end(), 0);
        if (dfs(0))
            return chosen_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t from) {
        const int remaining = target_ - static_cast<int>(chosen_.size());
        int abs_total = 0;
        for (int b : balance_) {
            const int a = b < 0 ? -b : b;
            if (a > remaining)
                return false;
            abs_total += a;
        }
        if (abs_total > remaining * h_.k())
            return false;
        if (remaining == 0)
            return abs_total == 0;
        for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= sets_.size(); ++i) {
            // Sets after i never touch vertices below low_[i].
            bool settled = true;
            for (int v = 0; v < low_[i]; ++v)
                settled = settled && balance_[static_cast<std::size_t>(v)] == 0;
            if (!settled)
                return false;
            const bool edge = is_edge_[i];
            if ((edge ? edges_ : non_edges_) >= target_ / 2)
                continue;
            apply(i, edge ? 1 : -1);
            if (dfs(i + 1))
                return true;
            apply(i, edge ? -1 : 1);
        }
        return false;
    }

    void apply(std::size_t i, int delta) {
        sets_[i].for_each([&](int v) { balance_[static_cast<std::size_t>(v)] += delta; });
        const bool edge = is_edge_[i];
        if (delta == (edge ? 1 : -1)) {
            chosen_.push_back(sets_[i]);
            ++(edge ? edges_ : non_edges_);
        } else {
            chosen_.pop_back();
            --(edge ? edges_ : non_edges_);
        }
    }

    const Hypergraph& h_;
    std::vector<VertexSet> sets_;
    std::vector<bool> is_edge_;
    std::vector<int> low_;
    std::vector<int> balance_;
    std::vector<VertexSet> chosen_;
    int target_ = 0;
    int edges_ = 0;
    int non_edges_ = 0;
};

} // namespace detail

/// Smallest support first, then lexicographically first list of sets.
///
/// Absence within the bound proves nothing about larger supports.
inline std::optional<SetLabeling> find_binary_certificate(const Hypergraph& h, int max_support,
                                                          const Budgets& budgets = {}) {
    require(max_support >= 1, errc::invalid_input, "max_support must be positive");
    const auto universe = binomial(static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(h.k()));
    require(universe <= budgets.ksets, errc::budget_exceeded, "too many k-sets for the certificate search");
    const auto domain = binomial(universe, static_cast<std::uint64_t>(max_support));
    require(domain <= budgets.search_domain, errc::budget_exceeded,
            "C(C(n,k), max_support) = " + std::to_string(domain) + " exceeds search budget " +
                std::to_string(budgets.search_domain));
    detail::BinaryCertificateSearch search(h);
    for (int s = 1; s <= max_support; ++s) {
        if (auto sets = search.run(s)) {
            SetLabeling y;
            for (auto set : *sets)
                y.entries.emplace_back(set, Rational(1));
            return y;
        }
    }
    return std::nullopt;
}

} // namespace sephyp
