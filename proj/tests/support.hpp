#pragma once

// Shared test helpers: compact digit notation for sets on [9] (135 = {1,3,5})
// and the paper's worked instances.

#include <random>
#include <string>
#include <vector>

#include "sephyp/sephyp.hpp"

namespace support {

using sephyp::Hypergraph;
using sephyp::VertexSet;

/// 135 -> {1,3,5} (1-based digits, stored 0-based).
inline VertexSet S(int digits) {
    VertexSet s;
    for (; digits > 0; digits /= 10)
        s = s.with(digits % 10 - 1);
    return s;
}

inline Hypergraph H(int n, int k, std::initializer_list<int> edges) {
    std::vector<VertexSet> sets;
    for (int e : edges)
        sets.push_back(S(e));
    return Hypergraph(n, k, std::move(sets));
}

inline std::string fixture(const std::string& name) { return std::string(SEPHYP_FIXTURES) + "/" + name; }

inline Hypergraph intro_separable() { return H(6, 3, {124, 134, 145, 146, 234, 245, 246, 345, 346}); }
inline Hypergraph intro_equatable() { return H(6, 3, {135, 136, 145, 146, 235, 236, 245, 246}); }
inline Hypergraph paving_example() { return H(5, 3, {123, 124, 134, 135, 145, 234, 235, 245}); }

inline Hypergraph rrst() {
    std::vector<VertexSet> edges;
    sephyp::for_each_kset(9, 3, [&](VertexSet s) {
        const auto e = s.one_based();
        const bool first = e[2] == 9 && e[1] >= 4;
        const bool second = e[0] >= 2 && e[1] >= 5 && e[2] >= 7;
        if (first || second)
            edges.push_back(s);
    });
    return Hypergraph(9, 3, std::move(edges));
}

inline sephyp::SetLabeling ones_on(std::initializer_list<int> sets) {
    sephyp::SetLabeling y;
    for (int s : sets)
        y.entries.emplace_back(S(s), sephyp::Rational(1));
    return y;
}

inline sephyp::VertexLabeling labels(std::initializer_list<int> xs) {
    sephyp::VertexLabeling x;
    for (int v : xs)
        x.values.emplace_back(v);
    return x;
}

/// Each k-set is an edge independently with probability p.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<VertexSet> edges;
    sephyp::for_each_kset(n, k, [&](VertexSet s) {
        if (coin(rng))
            edges.push_back(s);
    });
    return Hypergraph(n, k, std::move(edges));
}

} // namespace support
