#include "qbound/lp.hpp"

#include <algorithm>

#include "qbound/errors.hpp"

namespace qbound::ratlp {

namespace {

void validate(const LinearProgram& lp) {
    if (lp.num_vars == 0) throw DimensionMismatch("linear program needs at least one variable");
    if (lp.objective.size() != lp.num_vars)
        throw DimensionMismatch("objective length != variable count");
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != lp.num_vars)
            throw DimensionMismatch("constraint length != variable count");
    if (!lp.upper_bounds.empty() && lp.upper_bounds.size() != lp.num_vars)
        throw DimensionMismatch("upper bound list length != variable count");
}

// Dense simplex tableau. Rows are equality constraints with rhs >= 0 in the
// last column; maximization of the active cost vector via Bland's rule.
class Tableau {
public:
    Tableau(const LinearProgram& lp) {
        structural_ = lp.num_vars;
        std::vector<Constraint> rows(lp.constraints);
        if (!lp.upper_bounds.empty()) {
            for (std::size_t j = 0; j < lp.num_vars; ++j) {
                if (!lp.upper_bounds[j]) continue;
                Constraint c{std::vector<Rational>(lp.num_vars), Relation::LessEq,
                             *lp.upper_bounds[j]};
                c.coeffs[j] = 1;
                rows.push_back(std::move(c));
            }
        }
        const std::size_t nrows = rows.size();
        std::size_t slacks = 0;
        for (const auto& r : rows)
            if (r.rel != Relation::Equal) ++slacks;

        // Column layout: structural | slack/surplus | artificial.
        cols_ = structural_ + slacks;
        a_.assign(nrows, std::vector<Rational>(cols_ + 1));
        basis_.assign(nrows, 0);
        std::vector<std::size_t> needs_artificial;

        std::size_t next_slack = structural_;
        for (std::size_t r = 0; r < nrows; ++r) {
            auto& row = a_[r];
            for (std::size_t j = 0; j < structural_; ++j) row[j] = rows[r].coeffs[j];
            row[cols_] = rows[r].rhs;
            int slack_sign = 0;
            std::size_t slack_col = 0;
            if (rows[r].rel != Relation::Equal) {
                slack_col = next_slack++;
                slack_sign = rows[r].rel == Relation::LessEq ? 1 : -1;
            }
            bool negate = row[cols_] < 0 || (row[cols_] == 0 && slack_sign == -1);
            if (negate) {
                for (auto& v : row)
                    if (v != 0) v = -v;
                slack_sign = -slack_sign;
            }
            if (slack_sign != 0) row[slack_col] = slack_sign;
            if (slack_sign == 1)
                basis_[r] = slack_col;
            else
                needs_artificial.push_back(r);
        }

        first_artificial_ = cols_;
        cols_ += needs_artificial.size();
        for (auto& row : a_) {
            Rational rhs = std::move(row.back());
            row.pop_back();
            row.resize(cols_ + 1);
            row[cols_] = std::move(rhs);
        }
        for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
            std::size_t r = needs_artificial[k];
            a_[r][first_artificial_ + k] = 1;
            basis_[r] = first_artificial_ + k;
        }
    }

    bool has_artificials() const { return first_artificial_ < cols_; }

    // Runs phase 1; returns false when the program is infeasible.
    bool phase1() {
        if (!has_artificials()) return true;
        std::vector<Rational> cost(cols_);
        for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = -1;
        load_cost(cost);
        run(/*artificials_allowed=*/true);
        if (-zrow_[cols_] != 0) return false;  // positive artificial residue
        evict_artificials();
        return true;
    }

    // Phase 2 for an internal maximization cost vector over structural vars.
    LPStatus phase2(const std::vector<Rational>& structural_cost) {
        std::vector<Rational> cost(cols_);
        for (std::size_t j = 0; j < structural_; ++j) cost[j] = structural_cost[j];
        load_cost(cost);
        return run(/*artificials_allowed=*/false);
    }

    std::vector<Rational> assignment() const {
        std::vector<Rational> x(structural_);
        for (std::size_t r = 0; r < a_.size(); ++r)
            if (basis_[r] < structural_) x[basis_[r]] = a_[r][cols_];
        return x;
    }

private:
    void load_cost(const std::vector<Rational>& cost) {
        zrow_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) zrow_[j] = cost[j];
        for (std::size_t r = 0; r < a_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t k = 0; k <= cols_; ++k)
                if (a_[r][k] != 0) zrow_[k] -= cb * a_[r][k];
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        auto& prow = a_[r];
        if (prow[j] != 1) {
            const Rational piv = prow[j];
            for (auto& v : prow)
                if (v != 0) v /= piv;
        }
        for (std::size_t r2 = 0; r2 < a_.size(); ++r2) {
            if (r2 == r || a_[r2][j] == 0) continue;
            eliminate(a_[r2], prow, j);
        }
        if (zrow_[j] != 0) eliminate(zrow_, prow, j);
        basis_[r] = j;
    }

    static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow,
                          std::size_t j) {
        const Rational factor = target[j];
        for (std::size_t k = 0; k < prow.size(); ++k)
            if (prow[k] != 0) target[k] -= factor * prow[k];
        target[j] = 0;  // clear exactly, avoiding residue from the loop above
    }

    // Bland's rule: entering column is the lowest-index improving one,
    // leaving row breaks ratio ties by the lowest basic column index.
    LPStatus run(bool artificials_allowed) {
        const std::size_t enter_limit = artificials_allowed ? cols_ : first_artificial_;
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < enter_limit; ++j) {
                if (zrow_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) return LPStatus::Optimal;

            std::size_t leave = a_.size();
            Rational best_ratio;
            for (std::size_t r = 0; r < a_.size(); ++r) {
                if (a_[r][enter] <= 0) continue;
                Rational ratio = a_[r][cols_] / a_[r][enter];
                if (leave == a_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == a_.size()) return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }

    // After a feasible phase 1, pivots basic artificials out on any nonzero
    // non-artificial column; rows with none are redundant and get dropped.
    void evict_artificials() {
        for (std::size_t r = 0; r < a_.size();) {
            if (basis_[r] < first_artificial_) {
                ++r;
                continue;
            }
            std::size_t j = first_artificial_;
            for (std::size_t k = 0; k < first_artificial_; ++k) {
                if (a_[r][k] != 0) {
                    j = k;
                    break;
                }
            }
            if (j < first_artificial_) {
                pivot(r, j);
                ++r;
            } else {
                a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

    std::size_t structural_ = 0;
    std::size_t cols_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> zrow_;
};

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp) {
    validate(lp);
    Tableau tab(lp);
    if (!tab.phase1()) return LPOutcome{LPStatus::Infeasible, Rational(0), {}};

    std::vector<Rational> cost(lp.objective);
    if (lp.direction == Direction::Minimize)
        for (auto& c : cost) c = -c;
    LPStatus status = tab.phase2(cost);
    if (status == LPStatus::Unbounded) return LPOutcome{LPStatus::Unbounded, Rational(0), {}};

    LPOutcome out;
    out.status = LPStatus::Optimal;
    out.assignment = tab.assignment();
    out.value = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j)
        if (lp.objective[j] != 0 && out.assignment[j] != 0)
            out.value += lp.objective[j] * out.assignment[j];
    return out;
}

bool check_feasible(const LinearProgram& lp, const std::vector<Rational>& point) {
    validate(lp);
    if (point.size() != lp.num_vars)
        throw DimensionMismatch("point length != variable count");
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (point[j] < 0) return false;
        if (!lp.upper_bounds.empty() && lp.upper_bounds[j] && point[j] > *lp.upper_bounds[j])
            return false;
    }
    for (const auto& c : lp.constraints) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j)
            if (c.coeffs[j] != 0 && point[j] != 0) lhs += c.coeffs[j] * point[j];
        switch (c.rel) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
        }
    }
    return true;
}

namespace {

struct DisjunctiveSearch {
    const DisjunctiveProgram& dp;
    LinearProgram work;
    LPOutcome best;
    bool found = false;
    bool unbounded = false;

    explicit DisjunctiveSearch(const DisjunctiveProgram& d) : dp(d), work(d.base) {}

    void dfs(std::size_t depth) {
        if (unbounded) return;
        LPOutcome relax = solve_lp(work);
        if (relax.status == LPStatus::Infeasible) return;
        const bool resolved = depth == dp.disjunctions.size();
        if (resolved) {
            if (relax.status == LPStatus::Unbounded) {
                unbounded = true;
                return;
            }
            if (!found || relax.value > best.value) {
                best = std::move(relax);
                found = true;
            }
            return;
        }
        // A bounded relaxation no better than the incumbent cannot improve;
        // an unbounded one forces branching.
        if (relax.status == LPStatus::Optimal && found && relax.value <= best.value) return;
        for (const auto& alt : dp.disjunctions[depth]) {
            work.constraints.push_back(alt);
            dfs(depth + 1);
            work.constraints.pop_back();
            if (unbounded) return;
        }
    }
};

}  // namespace

LPOutcome solve_disjunctive(const DisjunctiveProgram& dp) {
    if (dp.base.direction != Direction::Maximize)
        throw DimensionMismatch("disjunctive solving requires a maximization objective");
    validate(dp.base);
    for (const auto& group : dp.disjunctions) {
        if (group.size() < 2)
            throw DimensionMismatch("disjunction groups need at least two alternatives");
        for (const auto& alt : group)
            if (alt.coeffs.size() != dp.base.num_vars)
                throw DimensionMismatch("alternative constraint length != variable count");
    }
    if (dp.disjunctions.empty()) return solve_lp(dp.base);

    DisjunctiveSearch search(dp);
    search.dfs(0);
    if (search.unbounded) return LPOutcome{LPStatus::Unbounded, Rational(0), {}};
    if (!search.found) return LPOutcome{LPStatus::Infeasible, Rational(0), {}};
    return search.best;
}

}  // namespace qbound::ratlp
