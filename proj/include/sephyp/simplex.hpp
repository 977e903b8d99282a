#pragma once

// Phase-I primal simplex for  A x <= b,  x free,  over exact rationals.
//
// Standard form: x = xp - xn, one slack per row, rows with b < 0 negated so the
// right-hand side is nonnegative; those rows start on an artificial variable,
// the others on their slack. Minimizing the artificial sum with Bland's rule
// either drives it to zero (x feasible) or stops at w > 0, in which case the
// reduced costs of the slack columns are a Farkas vector y >= 0 with
// y^T A = 0 and y^T b = -w.

#include <cstddef>
#include <optional>
#include <vector>

#include "sephyp/error.hpp"
#include "sephyp/rational.hpp"

namespace sephyp::detail {

struct DenseSystem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> a;   // row-major rows x cols
    std::vector<int> b;

    int at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct SimplexResult {
    bool feasible = false;
    std::vector<Rational> x;   // cols entries when feasible
    std::vector<Rational> y;   // rows entries when infeasible
    std::size_t pivots = 0;
};

class PhaseOneSimplex {
public:
    explicit PhaseOneSimplex(const DenseSystem& sys) {
        m_ = sys.rows;
        n_ = sys.cols;
        slack0_ = 2 * n_;
        art0_ = slack0_ + m_;
        for (std::size_t i = 0; i < m_; ++i)
            if (sys.b[i] < 0)
                art_row_.push_back(i);
        width_ = art0_ + art_row_.size();

        tab_.assign(m_ * width_, Rational(0));
        rhs_.assign(m_, Rational(0));
        basis_.assign(m_, 0);
        std::size_t next_art = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const int sign = sys.b[i] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                const int v = sign * sys.at(i, j);
                if (v != 0) {
                    cell(i, j) = v;
                    cell(i, n_ + j) = -v;
                }
            }
            cell(i, slack0_ + i) = sign;
            rhs_[i] = sign * sys.b[i];
            if (sign < 0) {
                cell(i, art0_ + next_art) = 1;
                basis_[i] = art0_ + next_art;
                ++next_art;
            } else {
                basis_[i] = slack0_ + i;
            }
        }
        // Reduced costs: d_j = c_j - sum over artificial-basic rows of tab(i, j).
        reduced_.assign(width_, Rational(0));
        for (std::size_t t = 0; t < art_row_.size(); ++t)
            reduced_[art0_ + t] = 1;
        objective_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < art0_)
                continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (sgn(cell(i, j)) != 0)
                    reduced_[j] -= cell(i, j);
            objective_ += rhs_[i];
        }
        retired_.assign(art_row_.size(), false);
    }

    SimplexResult run() {
        SimplexResult res;
        while (sgn(objective_) > 0) {
            const auto enter = entering();
            if (!enter)
                break;
            const auto leave = leaving(*enter);
            require(leave.has_value(), errc::internal, "phase-I objective unbounded below");
            pivot(*leave, *enter);
            ++res.pivots;
        }
        if (sgn(objective_) == 0) {
            res.feasible = true;
            res.x.assign(n_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i) {
                const auto j = basis_[i];
                if (j < n_)
                    res.x[j] += rhs_[i];
                else if (j < 2 * n_)
                    res.x[j - n_] -= rhs_[i];
            }
        } else {
            res.y.assign(m_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i)
                res.y[i] = reduced_[slack0_ + i];
        }
        return res;
    }

private:
    Rational& cell(std::size_t i, std::size_t j) { return tab_[i * width_ + j]; }

    bool usable(std::size_t j) const { return j < art0_ || !retired_[j - art0_]; }

    // Bland: lowest-index column with negative reduced cost.
    std::optional<std::size_t> entering() const {
        for (std::size_t j = 0; j < width_; ++j)
            if (usable(j) && sgn(reduced_[j]) < 0)
                return j;
        return std::nullopt;
    }

    // Minimum ratio; ties broken by the lowest basic variable index.
    std::optional<std::size_t> leaving(std::size_t col) {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& piv = cell(i, col);
            if (sgn(piv) <= 0)
                continue;
            Rational ratio = rhs_[i] / piv;
            if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational piv = cell(row, col);
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j) {
            Rational& c = cell(row, j);
            if (sgn(c) != 0) {
                c /= piv;
                nz.push_back(j);
            }
        }
        rhs_[row] /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row)
                continue;
            const Rational f = cell(i, col);
            if (sgn(f) == 0)
                continue;
            for (auto j : nz)
                cell(i, j) -= f * cell(row, j);
            rhs_[i] -= f * rhs_[row];
        }
        const Rational f = reduced_[col];
        for (auto j : nz)
            reduced_[j] -= f * cell(row, j);
        objective_ += f * rhs_[row];

        const auto out = basis_[row];
        if (out >= art0_)
            retired_[out - art0_] = true;
        basis_[row] = col;
    }

    std::size_t m_ = 0, n_ = 0, slack0_ = 0, art0_ = 0, width_ = 0;
    std::vector<std::size_t> art_row_;
    std::vector<Rational> tab_, rhs_, reduced_;
    std::vector<std::size_t> basis_;
    std::vector<bool> retired_;
    Rational objective_;
};

inline SimplexResult solve_phase_one(const DenseSystem& sys) {
    return PhaseOneSimplex(sys).run();
}

} // namespace sephyp::detail
