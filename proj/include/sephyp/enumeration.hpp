#pragma once

// Exhaustive verification harness: runs every structural theorem that applies
// to an instance and reports the first violation. A violation is a bug in the
// library, never data.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/feasibility.hpp"
#include "sephyp/hypercore.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/matroid.hpp"

namespace sephyp {

enum class InstanceClass { all, graphs, matroids, paving, binary, multipartite };

inline std::string_view to_string(InstanceClass c) {
    switch (c) {
    case InstanceClass::all: return "all";
    case InstanceClass::graphs: return "graphs";
    case InstanceClass::matroids: return "matroids";
    case InstanceClass::paving: return "paving";
    case InstanceClass::binary: return "binary";
    case InstanceClass::multipartite: return "multipartite";
    }
    return "?";
}

inline InstanceClass parse_instance_class(std::string_view s) {
    for (auto c : {InstanceClass::all, InstanceClass::graphs, InstanceClass::matroids, InstanceClass::paving,
                   InstanceClass::binary, InstanceClass::multipartite})
        if (to_string(c) == s)
            return c;
    fail(errc::invalid_input, "unknown class '" + std::string(s) + "'");
}

struct Violation {
    std::string check;
    Hypergraph instance;
    std::string detail;
};

/// What the harness learned about one instance.
struct InstanceFacts {
    Kind kind = Kind::separable;
    bool exchangeable = false;
    bool two_monotone = false;
    bool matroid = false;
    bool paving = false;
    bool binary = false;
    /// A 2-monotone equatable matroid would answer the open question in the negative.
    bool open_question_counterexample = false;
};

/// Extra knowledge about where an instance came from.
struct CheckContext {
    /// Instance is k-partite with respect to this partition.
    std::optional<Partition> partition;
    /// Instance is the basis family of a GF(2)-represented (or graphic) matroid.
    bool represented_binary = false;
};

namespace detail {

class TheoremChecker {
public:
    TheoremChecker(const Hypergraph& h, const CheckContext& ctx, const Budgets& budgets)
        : h_(h), ctx_(ctx), budgets_(budgets) {}

    std::optional<Violation> run(InstanceFacts& facts) {
        const auto cert = decide(h_, budgets_);
        facts.kind = cert.kind();
        const auto witness = is_exchangeable(h_);
        facts.exchangeable = witness.has_value();
        facts.two_monotone = is_r_monotone(h_, 2, budgets_);

        if (auto bad = find_certificate_violation(h_, cert))
            return violation("dichotomy", "decide's certificate fails: " + *bad);

        if (witness) {
            if (!is_valid_witness(h_, *witness))
                return violation("exchange-witness", "returned witness is invalid");
            const auto q = find_summable_quadruple(h_);
            if (!q || !is_valid_quadruple(h_, *q))
                return violation("witness-gives-quadruple", "exchangeable but no valid summable quadruple");
        }
        if (const auto q = find_summable_quadruple(h_)) {
            if (facts.kind != Kind::equatable)
                return violation("quadruple-implies-equatable", "summable quadruple on a separable instance");
            if (auto bad = find_equatable_violation(h_, labeling_from_quadruple(*q)))
                return violation("quadruple-implies-equatable", "quadruple labeling fails: " + *bad);
        }

        if (facts.two_monotone == facts.exchangeable)
            return violation("monotone-iff-not-exchangeable",
                             std::string("2-monotone=") + yes(facts.two_monotone) + " exchangeable=" + yes(facts.exchangeable));

        if (auto v = check_transforms(cert, facts))
            return v;

        // Classes on which equatable <=> exchangeable is a theorem.
        const bool equatable = facts.kind == Kind::equatable;
        auto theorem = [&](std::string_view cls) -> std::optional<Violation> {
            if (equatable != facts.exchangeable)
                return violation("class-theorem:" + std::string(cls),
                                 std::string("equatable=") + yes(equatable) + " exchangeable=" + yes(facts.exchangeable));
            return std::nullopt;
        };
        if (h_.k() <= 2) {
            if (auto v = theorem("graphs"))
                return v;
        }
        if (h_.k() == 2) {
            const auto ord = graph_orderable(h_);
            if (ord && !is_valid_ordering(h_, *ord))
                return violation("orderable-iff-separable", "returned ordering is invalid");
            if (ord.has_value() != (facts.kind == Kind::separable))
                return violation("orderable-iff-separable", std::string("orderable=") + yes(ord.has_value()) +
                                                                " kind=" + std::string(to_string(facts.kind)));
        }
        if (ctx_.partition) {
            if (!is_multipartite(h_, *ctx_.partition))
                return violation("multipartite", "instance is not multipartite for its partition");
            if (auto v = theorem("multipartite"))
                return v;
        }

        facts.matroid = is_matroid(h_);
        if (ctx_.represented_binary && !facts.matroid)
            return violation("represented-is-matroid", "bases of a represented matroid fail the exchange axiom");
        if (!facts.matroid)
            return std::nullopt;

        const BasisMatroid m(h_);
        facts.paving = is_paving(m);
        facts.binary = is_binary(m, budgets_);
        facts.open_question_counterexample = facts.two_monotone && equatable;
        if (ctx_.represented_binary && !facts.binary)
            return violation("represented-is-binary", "represented matroid fails the circuit test");
        if (facts.paving)
            if (auto v = theorem("paving"))
                return v;
        if (facts.binary)
            if (auto v = theorem("binary"))
                return v;
        if (h_.k() == 3)
            if (auto v = theorem("3-matroids"))
                return v;
        return check_matroid_lemmas(m, facts);
    }

private:
    static const char* yes(bool b) { return b ? "yes" : "no"; }

    Violation violation(std::string check, std::string detail) const { return Violation{std::move(check), h_, std::move(detail)}; }

    std::optional<Violation> check_transforms(const Certificate& cert, const InstanceFacts& facts) const {
        const auto comp = complement(h_, budgets_);
        if (decide(comp, budgets_).kind() != facts.kind)
            return violation("complement-invariance", "complement changes the kind");
        if (is_exchangeable(comp).has_value() != facts.exchangeable)
            return violation("complement-invariance", "complement changes exchangeability");
        const auto d = dual(h_);
        if (decide(d, budgets_).kind() != facts.kind)
            return violation("dual-invariance", "dual changes the kind");
        if (is_exchangeable(d).has_value() != facts.exchangeable)
            return violation("dual-invariance", "dual changes exchangeability");
        if (cert.kind() == Kind::equatable)
            if (auto bad = find_equatable_violation(d, dual_labeling(h_, cert.y())))
                return violation("dual-certificate", "y*(E) = y(V - E) fails on the dual: " + *bad);
        return std::nullopt;
    }

    std::optional<Violation> check_matroid_lemmas(const BasisMatroid& m, const InstanceFacts& facts) const {
        const auto l = loops(m);
        if (!l.empty()) {
            const int v = l.lowest();
            // Deleting a loop keeps the rank; skipped once the rank would fill the ground set.
            if (m.k() < m.n() - 1) {
                const auto minor = deletion(m, v);
                if (decide(minor.matroid.carrier(), budgets_).kind() != facts.kind)
                    return violation("loop-deletion", "deleting loop " + std::to_string(v + 1) + " changes the kind");
            }
            return std::nullopt;
        }
        const auto dec = lines(m);
        if (dec.nontrivial_count >= 2 && !facts.exchangeable)
            return violation("two-lines-exchangeable", std::to_string(dec.nontrivial_count) + " nontrivial lines, not exchangeable");
        return std::nullopt;
    }

    const Hypergraph& h_;
    const CheckContext& ctx_;
    const Budgets& budgets_;
};

} // namespace detail

/// Runs every applicable check on h, filling `facts`; returns the first violation.
inline std::optional<Violation> check_theorems(const Hypergraph& h, InstanceFacts& facts, const CheckContext& ctx = {},
                                               const Budgets& budgets = {}) {
    return detail::TheoremChecker(h, ctx, budgets).run(facts);
}

struct EnumerationCounts {
    std::uint64_t total = 0;
    std::uint64_t separable = 0;
    std::uint64_t equatable = 0;
    std::uint64_t exchangeable = 0;
    std::uint64_t matroids = 0;
    std::uint64_t paving = 0;
    std::uint64_t binary = 0;
    std::uint64_t open_question_counterexamples = 0;

    void add(const InstanceFacts& f) {
        ++total;
        ++(f.kind == Kind::separable ? separable : equatable);
        exchangeable += f.exchangeable;
        matroids += f.matroid;
        paving += f.paving;
        binary += f.binary;
        open_question_counterexamples += f.open_question_counterexample;
    }
};

struct EnumerationReport {
    int n = 0;
    int k = 0;
    InstanceClass cls = InstanceClass::all;
    EnumerationCounts counts;
    std::uint64_t scanned = 0;   // candidates visited before filtering
    std::vector<Violation> violations;
    std::optional<Hypergraph> first_open_question_counterexample;
};

/// Visits every instance of the class (all hypergraphs on [n] filtered by
/// class; for multipartite, all subsets of the transversals of the balanced
/// partition) and checks theorems, stopping at the first violation.
inline EnumerationReport enumerate_and_check(int n, int k, InstanceClass cls, const Budgets& budgets = {},
                                             const std::function<void(const EnumerationReport&)>& progress = {}) {
    if (cls == InstanceClass::graphs)
        require(k == 2, errc::precondition_violated, "class graphs needs k = 2");
    EnumerationReport rep;
    rep.n = n;
    rep.k = k;
    rep.cls = cls;

    CheckContext ctx;
    std::optional<HypergraphEnumerator> stream;
    if (cls == InstanceClass::multipartite) {
        ctx.partition = balanced_partition(n, k);
        validate_partition(*ctx.partition, n, k);
        stream.emplace(n, k, transversals(*ctx.partition, n, k), budgets);
    } else {
        stream.emplace(n, k, budgets);
    }

    const bool matroid_class =
        cls == InstanceClass::matroids || cls == InstanceClass::paving || cls == InstanceClass::binary;
    while (auto h = stream->next()) {
        ++rep.scanned;
        if (matroid_class) {
            if (!is_matroid(*h))
                continue;
            const BasisMatroid m(*h);
            if (cls == InstanceClass::paving && !is_paving(m))
                continue;
            if (cls == InstanceClass::binary && !is_binary(m, budgets))
                continue;
        }
        InstanceFacts facts;
        if (auto v = check_theorems(*h, facts, ctx, budgets)) {
            rep.violations.push_back(std::move(*v));
            break;
        }
        rep.counts.add(facts);
        if (facts.open_question_counterexample && !rep.first_open_question_counterexample)
            rep.first_open_question_counterexample = *h;
        if (progress && (rep.scanned & 0xFFFF) == 0)
            progress(rep);
    }
    return rep;
}

} // namespace sephyp
