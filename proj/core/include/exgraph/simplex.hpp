#pragma once

#include <vector>

#include "exgraph/rational.hpp"

namespace exgraph {

enum class ConstraintSense { LessEq, GreaterEq, Equal };

struct LinearConstraint {
    std::vector<std::pair<int, Rational>> terms;  // (variable index, coefficient)
    ConstraintSense sense = ConstraintSense::LessEq;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::vector<Rational> witness;  // structural variables only
};

// maximize objective . x  subject to the constraints and x >= 0, in exact
// rational arithmetic. Two-phase dense simplex with Bland's anti-cycling
// rule, so termination is guaranteed and results are deterministic.
LpResult lp_maximize(int num_vars, const std::vector<Rational>& objective,
                     const std::vector<LinearConstraint>& constraints);

}  // namespace exgraph
