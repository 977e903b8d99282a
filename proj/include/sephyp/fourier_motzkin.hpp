#pragma once

// Fourier-Motzkin elimination on A x <= b with multiplier tracking. Serves as
// an oracle for decide that shares nothing with the simplex path except the
// system builder and the verifiers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sephyp/budget.hpp"
#include "sephyp/error.hpp"
#include "sephyp/feasibility.hpp"
#include "sephyp/hypergraph.hpp"
#include "sephyp/rational.hpp"

namespace sephyp {

namespace detail {

struct FmRow {
    std::vector<Rational> coef;   // one per variable
    Rational rhs;
    std::vector<Rational> mult;   // nonnegative weights of the original rows
    std::uint64_t history = 0;    // original rows with positive weight
};

/// Divides a row by the gcd of its (integer) coefficients and rhs.
inline void reduce_row(FmRow& row) {
    Integer g(0);
    for (const auto& c : row.coef)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.rhs.get_num_mpz_t());
    if (g == 0 || g == 1)
        return;
    const Rational f(1, g);
    for (auto& c : row.coef)
        c *= f;
    row.rhs *= f;
    for (auto& m : row.mult)
        m *= f;
}

class FourierMotzkin {
public:
    explicit FourierMotzkin(const FarkasSystem& sys) : vars_(static_cast<std::size_t>(sys.n)), rows_count_(sys.rows()) {
        require(sys.rows() <= 64, errc::budget_exceeded, "Fourier-Motzkin tracks at most 64 original rows");
        std::vector<FmRow> rows;
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            FmRow r;
            r.coef.resize(vars_);
            for (std::size_t v = 0; v < vars_; ++v)
                r.coef[v] = sys.at(i, static_cast<int>(v));
            r.rhs = sys.b[i];
            r.mult.assign(rows_count_, Rational(0));
            r.mult[i] = 1;
            r.history = std::uint64_t{1} << i;
            rows.push_back(std::move(r));
        }
        stages_.push_back(std::move(rows));
    }

    /// Either a point x with A x <= b, or y >= 0 with y^T A = 0, y^T b < 0.
    SimplexResult run() {
        std::vector<bool> gone(vars_, false);
        for (std::size_t step = 0; step < vars_; ++step) {
            const auto& cur = stages_.back();
            if (auto y = contradiction(cur))
                return infeasible(*y);
            const auto var = pick_variable(cur, gone);
            gone[var] = true;
            order_.push_back(var);
            stages_.push_back(eliminate(cur, var, step + 1));
        }
        if (auto y = contradiction(stages_.back()))
            return infeasible(*y);
        return feasible();
    }

private:
    static std::optional<std::vector<Rational>> contradiction(const std::vector<FmRow>& rows) {
        for (const auto& r : rows) {
            const bool zero = std::all_of(r.coef.begin(), r.coef.end(), [](const Rational& c) { return sgn(c) == 0; });
            if (zero && sgn(r.rhs) < 0)
                return r.mult;
        }
        return std::nullopt;
    }

    SimplexResult infeasible(std::vector<Rational> y) const {
        SimplexResult res;
        res.feasible = false;
        res.y = std::move(y);
        return res;
    }

    // Fewest generated pairs first; ties by lowest index.
    std::size_t pick_variable(const std::vector<FmRow>& rows, const std::vector<bool>& gone) const {
        std::size_t best = vars_;
        std::uint64_t best_cost = 0;
        for (std::size_t v = 0; v < vars_; ++v) {
            if (gone[v])
                continue;
            std::uint64_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                const int s = sgn(r.coef[v]);
                pos += s > 0;
                neg += s < 0;
            }
            const auto cost = pos * neg;
            if (best == vars_ || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        return best;
    }

    std::vector<FmRow> eliminate(const std::vector<FmRow>& rows, std::size_t var, std::size_t eliminated) const {
        std::vector<const FmRow*> pos, neg;
        std::vector<FmRow> out;
        for (const auto& r : rows) {
            const int s = sgn(r.coef[var]);
            if (s > 0)
                pos.push_back(&r);
            else if (s < 0)
                neg.push_back(&r);
            else
                out.push_back(r);
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                const auto history = p->history | q->history;
                // Chernikov: after s eliminations a combination of more than
                // s + 1 original rows is redundant.
                if (static_cast<std::size_t>(std::popcount(history)) > eliminated + 1)
                    continue;
                const Rational wp = -q->coef[var];
                const Rational wq = p->coef[var];
                FmRow r;
                r.coef.resize(vars_);
                for (std::size_t v = 0; v < vars_; ++v)
                    r.coef[v] = wp * p->coef[v] + wq * q->coef[v];
                r.coef[var] = 0;
                r.rhs = wp * p->rhs + wq * q->rhs;
                r.mult.resize(rows_count_);
                for (std::size_t i = 0; i < rows_count_; ++i)
                    r.mult[i] = wp * p->mult[i] + wq * q->mult[i];
                r.history = history;
                reduce_row(r);
                out.push_back(std::move(r));
            }
        }
        return prune(std::move(out));
    }

    // Trivial rows (0 <= c, c >= 0) go; among equal left-hand sides the
    // tightest right-hand side stays.
    static std::vector<FmRow> prune(std::vector<FmRow> rows) {
        std::map<std::vector<Rational>, std::size_t> best;
        std::vector<FmRow> out;
        for (auto& r : rows) {
            const bool zero = std::all_of(r.coef.begin(), r.coef.end(), [](const Rational& c) { return sgn(c) == 0; });
            if (zero && sgn(r.rhs) >= 0)
                continue;
            auto it = best.find(r.coef);
            if (it == best.end()) {
                best.emplace(r.coef, out.size());
                out.push_back(std::move(r));
            } else if (r.rhs < out[it->second].rhs) {
                out[it->second] = std::move(r);
            }
        }
        return out;
    }

    // Back-substitution: fix variables in reverse elimination order, each at
    // its lower bound if it has one (else its upper bound, else zero).
    SimplexResult feasible() const {
        std::vector<Rational> x(vars_, Rational(0));
        for (std::size_t s = order_.size(); s-- > 0;) {
            const auto var = order_[s];
            const auto& rows = stages_[s];
            std::optional<Rational> lo, hi;
            for (const auto& r : rows) {
                const int sign = sgn(r.coef[var]);
                if (sign == 0)
                    continue;
                Rational rest = r.rhs;
                for (std::size_t v = 0; v < vars_; ++v)
                    if (v != var)
                        rest -= r.coef[v] * x[v];
                const Rational bound = rest / r.coef[var];
                if (sign > 0) {
                    if (!hi || bound < *hi)
                        hi = bound;
                } else if (!lo || bound > *lo) {
                    lo = bound;
                }
            }
            require(!lo || !hi || *lo <= *hi, errc::internal, "Fourier-Motzkin back-substitution found empty interval");
            x[var] = lo ? *lo : hi ? *hi : Rational(0);
        }
        SimplexResult res;
        res.feasible = true;
        res.x = std::move(x);
        return res;
    }

    std::size_t vars_;
    std::size_t rows_count_;
    std::vector<std::vector<FmRow>> stages_;
    std::vector<std::size_t> order_;
};

} // namespace detail

/// Same contract as decide, by Fourier-Motzkin elimination.
inline Certificate decide_fm(const Hypergraph& h, const Budgets& budgets = {}) {
    require(static_cast<std::uint64_t>(h.n()) <= budgets.fm_max_vertices, errc::budget_exceeded,
            "Fourier-Motzkin limited to n <= " + std::to_string(budgets.fm_max_vertices));
    const auto sys = build_system(h, budgets);
    auto res = detail::FourierMotzkin(sys).run();
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
        fail(errc::internal, "Fourier-Motzkin certificate failed verification: " + *bad);
    return *cert;
}

} // namespace sephyp
