#ifndef SMC_SIMPLEX_HPP
#define SMC_SIMPLEX_HPP

#include <vector>

namespace smc {

/// A small dense feasibility LP:
///
///     find x with  A_eq x = b_eq,  A_ub x <= b_ub,  lo <= x <= hi.
///
/// Solved by two-phase primal simplex with Bland's rule.  Intended for the
/// supporting-hyperplane oracle only (tens of rows and columns).
struct FeasibilityLP {
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;
    std::vector<std::vector<double>> a_ub;
    std::vector<double> b_ub;
    std::vector<double> lo;  ///< per-variable lower bounds (finite)
    std::vector<double> hi;  ///< per-variable upper bounds (finite)
};

/// True iff the LP admits a feasible point (phase-1 optimum below `tol`).
/// The margin-1 oracle formulation violates by O(1) when infeasible, so the
/// slack only needs to clear tableau roundoff (which scales with the box).
/// Throws SolverFailure on numerical breakdown.
bool lp_feasible(const FeasibilityLP& lp, double tol = 1e-5);

}  // namespace smc

#endif
