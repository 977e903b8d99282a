#include <gtest/gtest.h>

#include "support.hpp"

using namespace sephyp;
using support::H;
using support::S;

namespace {

OracleDecision run(const Gf2Matrix& m) {
    auto o = make_oracle(m);
    return decide_binary_via_oracle(m.cols, m.rank(), o);
}

} // namespace

TEST(BinaryOracle, PaperCases) {
    EXPECT_EQ(run(Gf2Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).verdict, Kind::separable);
    EXPECT_EQ(run(Gf2Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}})).verdict, Kind::equatable);
    EXPECT_EQ(run(Gf2Matrix::from_rows({{1, 1, 1, 0}, {0, 0, 0, 1}})).verdict, Kind::separable);
    EXPECT_EQ(run(Gf2Matrix::from_rows({{1, 1, 0}, {0, 0, 1}})).verdict, Kind::separable);
}

TEST(BinaryOracle, TraceMatchesQueryCount) {
    const auto d = run(Gf2Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}));
    EXPECT_EQ(d.queries_used, d.trace.size());
    EXPECT_LE(d.queries_used, 4u + 6u);
    for (const auto& [s, ans] : d.trace)
        EXPECT_LE(s.size(), 2);
}

TEST(BinaryOracle, AgreesWithLpOnRandomMatrices) {
    std::mt19937_64 rng(17);
    std::bernoulli_distribution coin(0.5);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + trial % 4;
        const int cols = 2 + trial % 6;
        std::vector<std::vector<int>> bits(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
        for (auto& r : bits)
            for (auto& b : r)
                b = coin(rng);
        const auto mat = Gf2Matrix::from_rows(bits);
        const int k = mat.rank();
        if (k < 1 || k >= cols)
            continue;
        auto o = make_oracle(mat);
        const auto d = decide_binary_via_oracle(cols, k, o);
        ASSERT_LE(d.queries_used, static_cast<std::size_t>(cols) + binomial(static_cast<std::uint64_t>(cols), 2));
        ASSERT_EQ(d.verdict, decide(from_gf2_matrix(mat).matroid.carrier()).kind());
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(BinaryOracle, LineWithBasisAvoidingIt) {
    // loop 5; line {1,3,4}; 2 and 6 trivial: n' = 5 = l + k, yet x = (-1,2,-1,-1,-9,2) separates
    const auto h = H(6, 2, {12, 16, 23, 24, 26, 36, 46});
    const BasisMatroid m(h);
    IndependenceOracle o(6, [&](VertexSet s) { return is_independent(m, s); });
    const auto d = decide_binary_via_oracle(6, 2, o);
    EXPECT_EQ(d.verdict, Kind::separable);
    EXPECT_EQ(decide(h).kind(), Kind::separable);
    EXPECT_LE(d.queries_used, 6u + 15u);
}

TEST(BinaryOracle, AgreesWithLpOnEveryBinaryMatroid) {
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > 15)
                continue;
            HypergraphEnumerator e(n, k);
            while (auto h = e.next()) {
                if (!is_matroid(*h))
                    continue;
                const BasisMatroid m(*h);
                if (!is_binary(m))
                    continue;
                IndependenceOracle o(n, [&](VertexSet s) { return is_independent(m, s); });
                const auto d = decide_binary_via_oracle(n, k, o);
                ASSERT_LE(d.queries_used, static_cast<std::size_t>(n) + binomial(static_cast<std::uint64_t>(n), 2));
                ASSERT_EQ(d.verdict, decide(*h).kind()) << to_string(h->edges().front()) << " n=" << n << " k=" << k;
            }
        }
}

TEST(BinaryOracle, RejectsMismatchedGround) {
    auto o = make_oracle(Gf2Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    EXPECT_THROW(decide_binary_via_oracle(4, 2, o), error);
}

TEST(BinaryOracle, InconsistentOracleIsReported) {
    // pair answers that are not transitive: 12 and 23 dependent, 13 independent
    IndependenceOracle o(4, [](VertexSet s) {
        if (s.size() <= 1)
            return true;
        return !(s == S(12) || s == S(23)) && s.size() <= 2;
    });
    try {
        decide_binary_via_oracle(4, 2, o);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::oracle_inconsistent);
    }
}

TEST(Adversary, SmallInstances) {
    const auto a2 = build_adversary(2);
    EXPECT_EQ(a2.h1, Hypergraph(4, 2, all_ksets(4, 2)));
    EXPECT_EQ(a2.h2, H(4, 2, {13, 14, 23, 24}));
    EXPECT_EQ(decide(a2.h2).kind(), Kind::equatable);

    const auto a3 = build_adversary(3);
    EXPECT_EQ(a3.h2.edge_count(), 18u);
    EXPECT_FALSE(a3.h2.contains(S(123)));
    EXPECT_FALSE(a3.h2.contains(S(456)));
    EXPECT_TRUE(is_valid_quadruple(a3.h2, SummableQuadruple{S(124), S(356), S(123), S(456)}));
    for (const auto* h : {&a3.h1, &a3.h2})
        EXPECT_TRUE(is_paving(BasisMatroid(*h)));
    EXPECT_THROW(build_adversary(1), error);
}

TEST(Adversary, QueryNothing) {
    const auto rep = run_indistinguishability_check(build_adversary(2), strategies::query_nothing());
    EXPECT_EQ(rep.queries, 0u);
    ASSERT_TRUE(rep.unqueried_pair);
    EXPECT_EQ(rep.unqueried_pair->first, S(12));
    EXPECT_EQ(rep.unqueried_pair->second, S(34));
    EXPECT_EQ(rep.alternative_kind, Kind::equatable);
    EXPECT_TRUE(rep.alternative_consistent);
    EXPECT_TRUE(rep.consistent_with_h2);
    EXPECT_EQ(rep.wrong_on, "alternative");
    EXPECT_EQ(rep.complementary_pairs, 3u);
    EXPECT_EQ(rep.query_threshold, 3u);
}

TEST(Adversary, QueryAllKsets) {
    const auto rep = run_indistinguishability_check(build_adversary(2), strategies::query_all_ksets(4, 2));
    EXPECT_EQ(rep.verdict, Kind::separable);
    EXPECT_EQ(rep.ksets_queried, 6u);
    EXPECT_FALSE(rep.unqueried_pair);
    EXPECT_FALSE(rep.consistent_with_h2);
    EXPECT_TRUE(rep.queried_f1_or_f2);
}

TEST(Adversary, BinaryAlgorithmTouchesNoKsets) {
    const auto rep = run_indistinguishability_check(build_adversary(3), strategies::binary_algorithm(6, 3));
    EXPECT_LE(rep.queries, 21u);
    EXPECT_EQ(rep.ksets_queried, 0u);
    EXPECT_FALSE(rep.queried_f1_or_f2);
    EXPECT_TRUE(rep.consistent_with_h2);
    ASSERT_TRUE(rep.unqueried_pair);
    EXPECT_TRUE(rep.alternative_consistent);
    EXPECT_EQ(rep.complementary_pairs, 10u);
    EXPECT_EQ(rep.query_threshold, 7u);
}

TEST(Adversary, QueryBudgetStopsStrategy) {
    const auto rep = run_indistinguishability_check(build_adversary(2), strategies::query_all_ksets(4, 2), 2);
    EXPECT_FALSE(rep.verdict);
    EXPECT_EQ(rep.queries, 2u);
    EXPECT_TRUE(rep.unqueried_pair);
}

TEST(Adversary, ReplayDetectsForbiddenQuery) {
    const auto a = build_adversary(2);
    EXPECT_TRUE(replay_consistent(a.h2, {{S(13), true}, {S(1), true}, {S(123), false}}));
    EXPECT_FALSE(replay_consistent(a.h2, {{S(12), true}}));
}
