#pragma once

#include "oresolve/oreop.hpp"

namespace oresolve {

// Scalar differential equation sum_i a_i(x) D^i f = sum_{j,k} d_{j,k}(x) D^k b_j.
struct ScalarODE {
    OreOp op;     // kind Derivative; coefficients in x
    RhsComb rhs;  // d_{j,k} may be rational after gcd_reduce
};

// One exact coefficient-comparison relation below the generic range.
struct SideRelation {
    long n;  // comparison index: coefficient of x^n
    std::vector<std::pair<long, EpsRat>> lhs;            // (absolute f index, coeff)
    std::vector<std::tuple<std::size_t, long, EpsRat>> rhs;  // (j, absolute b index, coeff)
    std::vector<RhsRef> rational;                        // pending q-hat contributions at this n
};

// Scalar recurrence sum_q c_q(N) f(N+q) = rhs, valid for N >= valid_from.
struct ScalarRec {
    OreOp op;     // kind Shift; coefficients polynomial in N
    RhsComb rhs;  // b_j(N+power) with polynomial coefficients in N
    // Non-polynomial right-hand-side multipliers kept symbolic: the term
    // coeff(x) * D^power b_j(x) contributes its x^(N - comparison_shift)
    // series coefficient; extraction is the caller's job (see coeffx).
    std::vector<RhsRef> rational_rhs;
    long comparison_shift = 0;  // recurrence index N compares coefficients of x^(N - comparison_shift)
    long valid_from = 0;
    std::vector<SideRelation> side;
};

// Coefficient comparison of the ODE against power-series unknowns.  Throws
// NonPolynomialRhs when a right-hand-side multiplier is not polynomial and
// allow_rational_rhs is false.
ScalarRec ode_to_rec(const ScalarODE& ode, bool allow_rational_rhs = false);

// Divide the equation by gcd(a_0, ..., a_rho); right-hand-side multipliers
// may turn rational.  Leaves the input unchanged when the gcd is constant.
ScalarODE gcd_reduce(const ScalarODE& ode);

// (N+p)(N+p-1)...(N+p-i+1) as a polynomial in N.
SysRat falling_factorial(long p, long i);

}  // namespace oresolve
