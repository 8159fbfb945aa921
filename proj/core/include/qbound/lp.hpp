#pragma once

#include <optional>
#include <vector>

#include "qbound/rational.hpp"

namespace qbound::ratlp {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Direction { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
    std::vector<Rational> coeffs;  // length = num_vars
    Relation rel = Relation::LessEq;
    Rational rhs;
};

/// Variables are implicitly >= 0, with optional per-variable upper bounds.
struct LinearProgram {
    std::size_t num_vars = 0;
    Direction direction = Direction::Maximize;
    std::vector<Rational> objective;                 // length = num_vars
    std::vector<Constraint> constraints;
    std::vector<std::optional<Rational>> upper_bounds;  // empty or length num_vars

    explicit LinearProgram(std::size_t vars = 0, Direction dir = Direction::Maximize)
        : num_vars(vars), direction(dir), objective(vars) {}

    Constraint& add_constraint(Relation rel, Rational rhs) {
        constraints.push_back(Constraint{std::vector<Rational>(num_vars), rel, std::move(rhs)});
        return constraints.back();
    }
};

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;                     // meaningful when Optimal
    std::vector<Rational> assignment;   // meaningful when Optimal

    bool optimal() const { return status == LPStatus::Optimal; }
};

/// Exact optimum over the rationals. Two-phase simplex with Bland's
/// anti-cycling pivot rule; deterministic (same input, same outcome and
/// assignment).
LPOutcome solve_lp(const LinearProgram& lp);

/// Exact feasibility test of a point (bounds and all constraints).
/// Throws DimensionMismatch if the point length differs from num_vars.
bool check_feasible(const LinearProgram& lp, const std::vector<Rational>& point);

/// Base program plus disjunction groups; at least one alternative per group
/// must hold. Objective must be Maximize.
struct DisjunctiveProgram {
    LinearProgram base;
    std::vector<std::vector<Constraint>> disjunctions;
};

/// Max of solve_lp over all alternative selections, found by depth-first
/// branch and bound. The relaxation with unresolved groups dropped gives the
/// pruning bound; an Unbounded relaxation forces branching. Returns
/// Infeasible if every selection is infeasible, and Unbounded if some fully
/// resolved selection is unbounded (a modeling error for every program built
/// by this toolkit).
LPOutcome solve_disjunctive(const DisjunctiveProgram& dp);

}  // namespace qbound::ratlp
