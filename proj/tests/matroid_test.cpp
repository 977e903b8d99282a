#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace sephyp;
using support::H;
using support::S;

namespace {

BasisMatroid uniform(int k, int n) { return BasisMatroid(Hypergraph(n, k, all_ksets(n, k))); }

Gf2Matrix columns(std::initializer_list<std::vector<int>> cols) {
    std::vector<std::vector<int>> rows(cols.begin()->size());
    for (const auto& c : cols)
        for (std::size_t r = 0; r < c.size(); ++r)
            rows[r].push_back(c[r]);
    return Gf2Matrix::from_rows(rows);
}

Graph graph(int vertices, std::initializer_list<std::pair<int, int>> one_based) {
    Graph g{vertices, {}};
    for (auto [u, v] : one_based)
        g.edges.emplace_back(u - 1, v - 1);
    return g;
}

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc::internal;
}

} // namespace

TEST(IsMatroid, Examples) {
    EXPECT_TRUE(is_matroid(Hypergraph(4, 3, all_ksets(4, 3))));
    EXPECT_FALSE(is_matroid(Hypergraph(4, 3, {})));
    const auto f = find_exchange_failure(support::rrst());
    ASSERT_TRUE(f);
    EXPECT_EQ(f->e1, S(149));
    EXPECT_EQ(f->e2, S(257));
    EXPECT_EQ(f->v1, 8);
    EXPECT_EQ(code_of([] { BasisMatroid m(support::rrst()); }), errc::not_a_matroid);
}

TEST(IsMatroid, AgreesWithDefinition) {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{4, 1}}) {
        HypergraphEnumerator e(n, k);
        while (auto h = e.next())
            ASSERT_EQ(is_matroid(*h), oracle::matroid(*h));
    }
}

TEST(Independence, Examples) {
    const BasisMatroid m(support::paving_example());
    EXPECT_TRUE(is_independent(m, S(123)));
    EXPECT_TRUE(is_independent(m, S(12)));
    EXPECT_FALSE(is_independent(m, S(125)));
    EXPECT_FALSE(is_independent(m, S(1234)));
}

TEST(Loops, Examples) {
    EXPECT_TRUE(loops(uniform(3, 5)).empty());
    EXPECT_TRUE(coloops(uniform(3, 5)).empty());
    const BasisMatroid single(H(3, 2, {12}));
    EXPECT_EQ(loops(single), S(3));
    EXPECT_EQ(coloops(single), S(12));
    const auto rep = from_gf2_matrix(columns({{1, 0}, {0, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(loops(rep.matroid), S(2));
}

TEST(Minors, UniformContraction) {
    for (int v = 0; v < 5; ++v) {
        const auto c = contraction(uniform(3, 5), v);
        EXPECT_EQ(c.matroid.carrier(), uniform(2, 4).carrier());
    }
}

TEST(Minors, ColoopDeletionEqualsContraction) {
    const BasisMatroid single(H(3, 2, {12}));
    const auto d = deletion(single, 0);
    EXPECT_EQ(d.matroid.n(), 2);
    EXPECT_EQ(d.matroid.k(), 1);
    ASSERT_EQ(d.matroid.bases().size(), 1u);
    // the one basis is the renumbered element 1, i.e. original element 2
    EXPECT_EQ(d.matroid.bases()[0], S(1));
    EXPECT_EQ(d.original, (std::vector<int>{1, 2}));
}

TEST(Minors, PavingContraction) {
    const auto c = contraction(BasisMatroid(support::paving_example()), 4);
    EXPECT_EQ(c.matroid.carrier(), H(4, 2, {13, 14, 23, 24}));
}

TEST(Minors, RankCollapse) {
    EXPECT_EQ(code_of([] { deletion(uniform(2, 3), 0); }), errc::rank_collapse);
    EXPECT_EQ(code_of([] { contraction(uniform(1, 3), 0); }), errc::rank_collapse);
}

TEST(Minors, StayMatroids) {
    HypergraphEnumerator e(5, 3);
    while (auto h = e.next()) {
        if (!is_matroid(*h))
            continue;
        const BasisMatroid m(*h);
        for (int v = 0; v < 5; ++v) {
            for (auto op : {&deletion, &contraction}) {
                try {
                    EXPECT_TRUE(is_matroid(op(m, v).matroid.carrier()));
                } catch (const error& err) {
                    EXPECT_EQ(err.code(), errc::rank_collapse);
                }
            }
        }
    }
}

TEST(FundamentalCircuit, Examples) {
    EXPECT_EQ(fundamental_circuit(uniform(2, 3), S(12), 2), S(123));
    const auto rep = from_gf2_matrix(columns({{1, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(fundamental_circuit(rep.matroid, S(13), 1), S(12));
    const auto triangle = from_graph(graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    EXPECT_EQ(fundamental_circuit(triangle, S(12), 2), S(123));
}

TEST(Circuits, Examples) {
    EXPECT_EQ(circuits(uniform(2, 4)), all_ksets(4, 3));
    const auto cs = circuits(BasisMatroid(support::paving_example()));
    EXPECT_NE(std::find(cs.begin(), cs.end(), S(125)), cs.end());
    EXPECT_NE(std::find(cs.begin(), cs.end(), S(345)), cs.end());
    const auto with_loop = circuits(BasisMatroid(H(3, 2, {12})));
    EXPECT_EQ(with_loop.front(), S(3));
}

TEST(Circuits, AgreeWithDefinitionAndEliminate) {
    for (auto [n, k] : {std::pair{5, 2}, std::pair{5, 3}}) {
        HypergraphEnumerator e(n, k);
        while (auto h = e.next()) {
            if (!is_matroid(*h))
                continue;
            const BasisMatroid m(*h);
            const auto cs = circuits(m);
            std::vector<oracle::Mask> got;
            for (auto c : cs)
                got.push_back(static_cast<oracle::Mask>(c.bits()));
            auto want = oracle::circuits(*h);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            ASSERT_EQ(got, want);
            for (auto c1 : cs)
                for (auto c2 : cs) {
                    if (c1 == c2)
                        continue;
                    (c1 & c2).for_each([&](int v) {
                        (c1 - c2).for_each([&](int u) {
                            const bool exists = std::any_of(cs.begin(), cs.end(), [&](VertexSet c) {
                                return c.contains(u) && c.subset_of((c1 | c2).without(v));
                            });
                            ASSERT_TRUE(exists);
                        });
                    });
                }
        }
    }
}

TEST(Paving, Examples) {
    EXPECT_TRUE(is_paving(BasisMatroid(support::paving_example())));
    EXPECT_FALSE(is_paving(BasisMatroid(H(3, 2, {12}))));
    std::vector<VertexSet> h2;
    for (auto s : all_ksets(6, 3))
        if (s != S(123) && s != S(456))
            h2.push_back(s);
    EXPECT_TRUE(is_paving(BasisMatroid(Hypergraph(6, 3, h2))));
}

TEST(Binary, Examples) {
    EXPECT_FALSE(is_binary(uniform(2, 4)));
    const auto k4 = from_graph(graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    EXPECT_TRUE(is_binary(k4));
}

TEST(Binary, AgreesWithRepresentabilitySearch) {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}}) {
        HypergraphEnumerator e(n, k);
        while (auto h = e.next()) {
            if (is_matroid(*h)) {
                ASSERT_EQ(is_binary(BasisMatroid(*h)), oracle::binary(*h));
            }
        }
    }
}

TEST(Binary, RandomGf2MatricesAreBinary) {
    std::mt19937_64 rng(13);
    std::bernoulli_distribution coin(0.5);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 2 + trial % 3;
        const int cols = rows + 1 + trial % 3;
        std::vector<std::vector<int>> bits(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
        for (auto& r : bits)
            for (auto& b : r)
                b = coin(rng);
        const auto mat = Gf2Matrix::from_rows(bits);
        if (mat.rank() < 1 || mat.rank() >= cols)
            continue;
        const auto rep = from_gf2_matrix(mat);
        EXPECT_TRUE(is_binary(rep.matroid));
        ++built;
    }
    EXPECT_GT(built, 100);
}

TEST(Lines, Examples) {
    EXPECT_EQ(lines(uniform(3, 5)).lines.size(), 5u);
    EXPECT_EQ(lines(uniform(3, 5)).nontrivial_count, 0);
    const auto rep = from_gf2_matrix(columns({{1, 0}, {1, 0}, {0, 1}}));
    const auto dec = lines(rep.matroid);
    EXPECT_EQ(dec.lines, (std::vector<VertexSet>{S(12), S(3)}));
    EXPECT_EQ(dec.nontrivial_count, 1);
    const auto multi = from_graph(graph(3, {{1, 2}, {1, 2}, {2, 3}}));
    EXPECT_EQ(lines(multi).lines, (std::vector<VertexSet>{S(12), S(3)}));
    EXPECT_EQ(code_of([] { lines(BasisMatroid(H(3, 2, {12}))); }), errc::has_loops);
}

TEST(Gf2, Constructors) {
    const auto rep = from_gf2_matrix(columns({{1, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(rep.matroid.carrier(), H(3, 2, {13, 23}));
    // identity: a single basis covering the ground set; the oracle still works
    const auto id = Gf2Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(id.rank(), 3);
    EXPECT_EQ(code_of([&] { from_gf2_matrix(id); }), errc::rank_collapse);
    auto oracle = make_oracle(id);
    EXPECT_TRUE(oracle.independent(S(123)));
    // identity plus a zero column: single basis [1..k]
    const auto padded = from_gf2_matrix(columns({{1, 0}, {0, 1}, {0, 0}}));
    EXPECT_EQ(padded.matroid.carrier(), H(3, 2, {12}));
    EXPECT_EQ(code_of([] { from_gf2_matrix(columns({{0, 0}, {0, 0}})); }), errc::rank_zero);
    EXPECT_EQ(code_of([] { Gf2Matrix::from_rows({{1, 2}}); }), errc::invalid_input);
}

TEST(Graphic, Constructors) {
    const auto triangle = from_graph(graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    EXPECT_EQ(triangle.carrier(), H(3, 2, {12, 13, 23}));
    const auto k4 = from_graph(graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    EXPECT_EQ(k4.bases().size(), 16u);
    // vertex-edge incidence matrix of K4 represents the same matroid over GF(2)
    const auto inc = Gf2Matrix::from_rows({{1, 1, 1, 0, 0, 0}, {1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
    EXPECT_EQ(from_gf2_matrix(inc).matroid.carrier(), k4.carrier());
    // self-loop becomes a matroid loop
    const auto looped = from_graph(graph(3, {{1, 1}, {1, 2}, {2, 3}, {1, 3}}));
    EXPECT_EQ(loops(looped), S(1));
    EXPECT_EQ(code_of([] { from_graph(graph(3, {{1, 2}, {2, 3}})); }), errc::rank_collapse);
}

TEST(Augment, Examples) {
    const auto m = uniform(3, 5);
    EXPECT_EQ(augment(m, VertexSet{}, S(234)), S(234));
    EXPECT_EQ(augment(m, S(234), S(234)), S(234));
    EXPECT_EQ(augment(m, S(5), S(123)), S(125));
}

TEST(Oracle, CachesAndLimits) {
    auto o = make_oracle(columns({{1, 0}, {1, 0}, {0, 1}}));
    EXPECT_FALSE(o.independent(S(12)));
    EXPECT_FALSE(o.independent(S(12)));
    EXPECT_EQ(o.queries(), 1u);
    o.set_limit(2);
    EXPECT_TRUE(o.independent(S(13)));
    EXPECT_EQ(code_of([&] { o.independent(S(23)); }), errc::budget_exceeded);
    EXPECT_TRUE(o.independent(S(13)));   // cached answers stay free
}
