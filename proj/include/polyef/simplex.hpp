#pragma once

#include <memory>

#include "polyef/linear_system.hpp"

namespace polyef {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;       // meaningful when Optimal
    RatVector point;      // over the system's variable order, Optimal only
    RatVector dual_ineq;  // one multiplier >= 0 per inequality row, Optimal only
    RatVector dual_eq;    // one free multiplier per equation row, Optimal only
    long pivots = 0;
};

// Exact two-phase simplex with Bland's anti-cycling pivot rule.
//
// Construction performs the objective-independent work once (equation
// reduction and phase one), so a solver instance can be reused for many
// objectives over the same system. Every Optimal result carries an exact
// dual certificate which is re-checked in exact arithmetic before the
// result is returned.
class LpSolver {
public:
    explicit LpSolver(const LinearSystem& s);
    ~LpSolver();
    LpSolver(LpSolver&&) noexcept;
    LpSolver& operator=(LpSolver&&) noexcept;

    bool feasible() const;
    // Exact max of objective . x over the system; objective length must
    // equal the variable count.
    LpResult maximize(const RatVector& objective) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

LpResult solve_max(const LinearSystem& s, const RatVector& objective);
bool is_feasible(const LinearSystem& s);

// Max of an objective given over the projection variables only; auxiliary
// variables get coefficient zero.
LpResult solve_max_projected(const ExtendedFormulation& e, const RatVector& proj_objective);

}  // namespace polyef
