#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace sephyp;
using support::H;
using support::S;

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(format_rational(parse_rational("4/2")), "2");
    for (const char* bad : {"", "1/0", "1.5", "a", "1/-2", "/3", "2/"})
        EXPECT_THROW(parse_rational(bad), error) << bad;
}

TEST(FarkasSystem, SingletonExample) {
    const auto sys = build_system(H(3, 1, {1}));
    EXPECT_EQ(sys.b, (std::vector<int>{0, -1, -1}));
    EXPECT_EQ(sys.at(0, 0), -1);
    EXPECT_EQ(sys.at(1, 1), 1);
    EXPECT_EQ(sys.at(1, 0), 0);
}

TEST(FarkasSystem, IntroSeparableRows) {
    const auto sys = build_system(support::intro_separable());
    ASSERT_EQ(sys.rows(), 20u);
    const auto row = static_cast<std::size_t>(std::find(sys.row_sets.begin(), sys.row_sets.end(), S(124)) - sys.row_sets.begin());
    EXPECT_EQ(sys.b[row], 0);
    EXPECT_EQ((std::vector<int>{sys.at(row, 0), sys.at(row, 1), sys.at(row, 2), sys.at(row, 3), sys.at(row, 4), sys.at(row, 5)}),
              (std::vector<int>{-1, -1, 0, -1, 0, 0}));
    EXPECT_EQ(sys.b[0], -1);   // 123 is a non-edge
}

TEST(FarkasSystem, CompleteGraphHasZeroRhs) {
    const auto sys = build_system(Hypergraph(4, 2, all_ksets(4, 2)));
    for (int b : sys.b)
        EXPECT_EQ(b, 0);
    for (int e : sys.a)
        EXPECT_LE(e, 0);
}

TEST(Verify, PaperCertificates) {
    EXPECT_TRUE(verify_separating(support::intro_separable(), support::labels({-1, -1, -1, 3, -2, -2})));
    EXPECT_TRUE(verify_equatable(support::intro_equatable(), support::ones_on({134, 135, 246, 256})));
    EXPECT_TRUE(verify_equatable(support::paving_example(), support::ones_on({125, 135, 245, 345})));
    EXPECT_TRUE(verify_equatable(support::rrst(), support::ones_on({149, 178, 239, 267, 358, 456})));
}

TEST(Verify, ReportsFirstViolation) {
    const auto h = support::intro_separable();
    EXPECT_EQ(find_separation_violation(h, support::labels({0, 0, 0, 0, 0, 0})), "non-edge {1,2,3} has x-sum 0 >= 0");
    EXPECT_EQ(find_separation_violation(h, support::labels({1, 1})), "labeling has 2 values for 6 vertices");
    EXPECT_FALSE(verify_equatable(h, SetLabeling{}));
    auto neg = support::ones_on({134});
    neg.entries[0].second = -1;
    EXPECT_FALSE(verify_equatable(h, neg));
    EXPECT_FALSE(verify_equatable(h, support::ones_on({134, 134})));
    EXPECT_FALSE(verify_equatable(h, support::ones_on({12})));
    EXPECT_EQ(find_equatable_violation(support::intro_equatable(), support::ones_on({134, 135})),
              "vertex 4: edge mass 0 != non-edge mass 1");
}

TEST(Decide, PaperExamples) {
    EXPECT_EQ(decide(support::intro_separable()).kind(), Kind::separable);
    EXPECT_EQ(decide(support::intro_equatable()).kind(), Kind::equatable);
    EXPECT_EQ(decide(support::paving_example()).kind(), Kind::equatable);
    EXPECT_EQ(decide(support::rrst()).kind(), Kind::equatable);
    EXPECT_EQ(decide(H(4, 2, {12, 23, 34})).kind(), Kind::equatable);
    EXPECT_EQ(decide(Hypergraph(5, 2, {})).kind(), Kind::separable);
}

TEST(Decide, CertificatesArePrimitiveIntegers) {
    for (const auto& h : {support::intro_separable(), support::intro_equatable(), support::rrst()}) {
        const auto c = decide(h);
        std::vector<Rational> vals;
        if (c.kind() == Kind::separable)
            vals = c.x().values;
        else
            for (const auto& [s, v] : c.y().entries)
                vals.push_back(v);
        Integer g(0);
        for (const auto& v : vals) {
            EXPECT_EQ(v.get_den(), 1);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        }
        EXPECT_EQ(g, 1);
    }
}

TEST(Decide, RespectsRowBudget) {
    Budgets b;
    b.lp_rows = 10;
    EXPECT_THROW(decide(support::intro_separable(), b), error);
}

TEST(DecideFm, AgreesWithLpExhaustively) {
    for (auto [n, k] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 3}, std::pair{5, 3}}) {
        HypergraphEnumerator e(n, k);
        while (auto h = e.next()) {
            const auto lp = decide(*h);
            const auto fm = decide_fm(*h);
            ASSERT_EQ(lp.kind(), fm.kind());
            ASSERT_TRUE(verify_certificate(*h, fm));
        }
    }
}

TEST(DecideFm, RefusesLargeInstances) {
    EXPECT_THROW(decide_fm(support::rrst()), error);
    EXPECT_EQ(decide_fm(support::intro_equatable()).kind(), Kind::equatable);
}

TEST(Certificates, EquatableMassesBalanceInAggregate) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = support::random_hypergraph(rng, 6, 3, 0.5);
        const auto c = decide(h);
        if (c.kind() != Kind::equatable)
            continue;
        Rational on_edges(0), off_edges(0);
        for (const auto& [s, v] : c.y().entries)
            (h.contains(s) ? on_edges : off_edges) += v;
        EXPECT_EQ(on_edges, off_edges);
    }
}

TEST(Certificates, DualLabelingVerifiesOnDual) {
    const auto h = support::intro_equatable();
    const auto y = support::ones_on({134, 135, 246, 256});
    EXPECT_TRUE(verify_equatable(dual(h), dual_labeling(h, y)));
}

TEST(Certificates, QuadrupleLabelingVerifies) {
    const auto h = support::intro_equatable();
    EXPECT_TRUE(verify_equatable(h, labeling_from_quadruple(*find_summable_quadruple(h))));
}

TEST(BinaryCertificate, PaperExamples) {
    const auto rr = find_binary_certificate(support::rrst(), 6);
    ASSERT_TRUE(rr);
    EXPECT_TRUE(verify_equatable(support::rrst(), *rr));
    EXPECT_LE(rr->entries.size(), 6u);

    const auto intro = find_binary_certificate(support::intro_equatable(), 4);
    ASSERT_TRUE(intro);
    EXPECT_EQ(intro->entries.size(), 4u);
    EXPECT_TRUE(verify_equatable(support::intro_equatable(), *intro));

    EXPECT_FALSE(find_binary_certificate(Hypergraph(5, 2, all_ksets(5, 2)), 6));
    EXPECT_FALSE(find_binary_certificate(support::intro_separable(), 6));
}

TEST(BinaryCertificate, SmallestSupportFirst) {
    // RRST is not exchangeable, so no 4-set certificate exists; 6 is the least.
    EXPECT_FALSE(find_binary_certificate(support::rrst(), 5));
}

TEST(BinaryCertificate, AgreesWithBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + trial % 2;
        const int k = 2 + trial % 2;
        const auto h = support::random_hypergraph(rng, n, k, 0.5);
        for (int s = 1; s <= 4; ++s)
            ASSERT_EQ(find_binary_certificate(h, s).has_value(), oracle::binary_certificate_exists(h, s));
    }
}

TEST(BinaryCertificate, RespectsSearchBudget) {
    Budgets b;
    b.search_domain = 100;
    EXPECT_THROW(find_binary_certificate(support::rrst(), 6, b), error);
}
