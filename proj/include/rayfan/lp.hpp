#pragma once

#include "rayfan/linalg.hpp"

namespace rayfan::polycore {

enum class Relation { GreaterEqual, StrictlyGreater, Equal };

// normal . x  {>=, >, =}  rhs
struct LinearConstraint {
    RatVec normal;
    Relation rel = Relation::GreaterEqual;
    Rat rhs = 0;
};

inline LinearConstraint ge(RatVec normal, Rat rhs = 0) {
    return {std::move(normal), Relation::GreaterEqual, std::move(rhs)};
}
inline LinearConstraint gt(RatVec normal, Rat rhs = 0) {
    return {std::move(normal), Relation::StrictlyGreater, std::move(rhs)};
}
inline LinearConstraint eq(RatVec normal, Rat rhs = 0) {
    return {std::move(normal), Relation::Equal, std::move(rhs)};
}

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOptimum {
    LpStatus status = LpStatus::Infeasible;
    Rat value = 0;
    RatVec witness;  // one entry per variable, empty when infeasible
};

// Maximizes objective . x over the weak constraints (StrictlyGreater is
// rejected here; use lp_feasible for strict systems). Variables are free.
// Exact rational simplex with Bland's rule, so no cycling and no rounding.
LpOptimum lp_optimize(const std::vector<LinearConstraint>& constraints,
                      const RatVec& objective, size_t dim);

struct LpFeasibility {
    bool feasible = false;
    RatVec witness;
};

// Decides feasibility of a mixed weak/strict rational system. Strict
// inequalities go through an auxiliary slack: maximize s subject to
// expr - s >= rhs and s <= 1; the system is feasible iff the optimum is
// positive. Returns an exact rational witness when feasible.
LpFeasibility lp_feasible(const std::vector<LinearConstraint>& constraints, size_t dim);

}  // namespace rayfan::polycore
