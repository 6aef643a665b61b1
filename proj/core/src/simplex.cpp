#include "exgraph/simplex.hpp"

#include <algorithm>

#include "exgraph/errors.hpp"

namespace exgraph {

namespace {

// Dense tableau: rows 0..m-1 are constraints with rhs in the last
// column, row m is the reduced-cost row (entering candidates have
// positive entries; maximization).
class Tableau {
public:
    Tableau(int num_vars, const std::vector<LinearConstraint>& constraints) : n_(num_vars) {
        const int m = static_cast<int>(constraints.size());

        // Column layout: structural | slack/surplus | artificial | rhs.
        int n_slack = 0, n_art = 0;
        for (const auto& c : constraints) {
            if (c.sense != ConstraintSense::Equal) ++n_slack;
            if (c.sense != ConstraintSense::LessEq || c.rhs.sign() < 0) ++n_art;
        }
        // Rows are sign-normalized to rhs >= 0 first, which can turn a
        // LessEq into a GreaterEq needing an artificial; count conservatively.
        slack_begin_ = n_;
        art_begin_ = n_ + n_slack;
        cols_ = n_ + n_slack + n_art;
        rows_.assign(static_cast<std::size_t>(m + 1),
                     std::vector<Rational>(static_cast<std::size_t>(cols_ + 1)));
        basis_.assign(static_cast<std::size_t>(m), -1);

        int next_slack = slack_begin_, next_art = art_begin_;
        for (int i = 0; i < m; ++i) {
            const auto& c = constraints[i];
            auto& row = rows_[static_cast<std::size_t>(i)];
            for (const auto& [var, coeff] : c.terms) {
                if (var < 0 || var >= n_) throw InputError("LP variable index out of range");
                row[static_cast<std::size_t>(var)] += coeff;
            }
            row[static_cast<std::size_t>(cols_)] = c.rhs;

            ConstraintSense sense = c.sense;
            if (row[static_cast<std::size_t>(cols_)].sign() < 0) {
                for (auto& x : row) x = -x;
                if (sense == ConstraintSense::LessEq)
                    sense = ConstraintSense::GreaterEq;
                else if (sense == ConstraintSense::GreaterEq)
                    sense = ConstraintSense::LessEq;
            }

            if (sense == ConstraintSense::LessEq) {
                row[static_cast<std::size_t>(next_slack)] = Rational(1);
                basis_[static_cast<std::size_t>(i)] = next_slack++;
            } else if (sense == ConstraintSense::GreaterEq) {
                row[static_cast<std::size_t>(next_slack++)] = Rational(-1);
                row[static_cast<std::size_t>(next_art)] = Rational(1);
                basis_[static_cast<std::size_t>(i)] = next_art++;
            } else {
                row[static_cast<std::size_t>(next_art)] = Rational(1);
                basis_[static_cast<std::size_t>(i)] = next_art++;
            }
        }
        art_end_ = next_art;
    }

    bool has_artificials() const { return art_end_ > art_begin_; }
    bool is_artificial(int col) const { return col >= art_begin_ && col < art_end_; }

    // Phase 1: maximize -(sum of artificials). Returns true when the
    // artificials reach zero, i.e. the constraints are feasible.
    bool phase1() {
        auto& obj = rows_.back();
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t j = 0; j <= static_cast<std::size_t>(cols_); ++j)
                obj[j] += rows_[i][j];
        }
        for (int j = art_begin_; j < art_end_; ++j) obj[static_cast<std::size_t>(j)] = Rational(0);
        // The stored rhs entry is the negated objective, here sum of
        // artificials, which starts at sum b_i and must reach zero.

        // Artificials may leave the basis but never re-enter.
        iterate(/*forbid_artificials=*/true);
        if (obj[static_cast<std::size_t>(cols_)].sign() != 0) return false;
        pivot_out_artificials();
        return true;
    }

    // Phase 2 with the caller's objective. Returns false when unbounded.
    bool phase2(const std::vector<Rational>& objective) {
        auto& obj = rows_.back();
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (int j = 0; j < n_; ++j) obj[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
        // Price out basic variables.
        for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
            const int b = basis_[i];
            if (obj[static_cast<std::size_t>(b)].is_zero()) continue;
            const Rational factor = obj[static_cast<std::size_t>(b)];
            for (std::size_t j = 0; j <= static_cast<std::size_t>(cols_); ++j)
                obj[j] -= factor * rows_[i][j];
        }
        return iterate(/*forbid_artificials=*/true);
    }

    std::vector<Rational> witness() const {
        std::vector<Rational> x(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
            if (basis_[i] < n_)
                x[static_cast<std::size_t>(basis_[i])] = rows_[i][static_cast<std::size_t>(cols_)];
        return x;
    }

private:
    // Dantzig pricing while progress is made; after a run of degenerate
    // pivots switch to Bland's rule, whose termination guarantee rules
    // out cycling. Both rules break ties deterministically.
    bool iterate(bool forbid_artificials) {
        int stalled = 0;
        while (true) {
            const auto& obj = rows_.back();
            const bool use_bland = stalled >= 64;
            int entering = -1;
            for (int j = 0; j < cols_; ++j) {
                if (forbid_artificials && is_artificial(j)) continue;
                const Rational& c = obj[static_cast<std::size_t>(j)];
                if (c.sign() <= 0) continue;
                if (use_bland) {
                    entering = j;
                    break;
                }
                if (entering < 0 || c > obj[static_cast<std::size_t>(entering)]) entering = j;
            }
            if (entering < 0) return true;

            int leaving = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
                const Rational& a = rows_[i][static_cast<std::size_t>(entering)];
                if (a.sign() <= 0) continue;
                const Rational ratio = rows_[i][static_cast<std::size_t>(cols_)] / a;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis_[i] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;  // unbounded direction
            stalled = best_ratio.is_zero() ? stalled + 1 : 0;
            pivot(static_cast<std::size_t>(leaving), entering);
        }
    }

    void pivot(std::size_t row, int col) {
        auto& prow = rows_[row];
        const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
        for (auto& x : prow) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            const Rational factor = rows_[i][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j <= static_cast<std::size_t>(cols_); ++j)
                rows_[i][j] -= factor * prow[j];
        }
        basis_[row] = col;
    }

    // Degenerate artificials still in the basis after phase 1 are pivoted
    // onto any usable non-artificial column; all-zero rows are redundant
    // constraints and harmless to keep.
    void pivot_out_artificials() {
        for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (int j = 0; j < art_begin_; ++j) {
                if (!rows_[i][static_cast<std::size_t>(j)].is_zero()) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    int n_;
    int cols_ = 0;
    int slack_begin_ = 0;
    int art_begin_ = 0;
    int art_end_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
};

}  // namespace

LpResult lp_maximize(int num_vars, const std::vector<Rational>& objective,
                     const std::vector<LinearConstraint>& constraints) {
    if (num_vars < 0 || static_cast<int>(objective.size()) != num_vars)
        throw InputError("LP objective length must match variable count");

    Tableau t(num_vars, constraints);

    LpResult result;
    if (t.has_artificials() && !t.phase1()) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    if (!t.phase2(objective)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.witness = t.witness();
    for (int j = 0; j < num_vars; ++j)
        result.value += objective[static_cast<std::size_t>(j)] * result.witness[static_cast<std::size_t>(j)];
    return result;
}

}  // namespace exgraph
