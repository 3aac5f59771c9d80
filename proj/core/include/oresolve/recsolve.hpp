#pragma once

#include <functional>
#include <map>
#include <optional>

#include "oresolve/epslaurent.hpp"
#include "oresolve/holonomic.hpp"
#include "oresolve/sumexpr.hpp"

namespace oresolve {

// Some epsilon order required a solution outside the nested-sum class (the
// operator did not factor into first-order pieces over the search field).
struct OutsideClass : Error {
    long residual_order;
    explicit OutsideClass(const std::string& msg, long order)
        : Error(msg), residual_order(order) {}
};

struct RecSolveOptions {
    bool quad_ext = false;   // extend the ratio search to one quadratic extension
    long check_points = 25;  // substitution-verification span
};

// Basis of all polynomial solutions of sum_j coeffs[j](N) y(N+j) = 0.
std::vector<PolyV> poly_solutions(const std::vector<PolyV>& coeffs);

// All hypergeometric solution ratios r(N) = y(N+1)/y(N) of the homogeneous
// recurrence, up to constants.
std::vector<RatFunV> hyper_solutions(const std::vector<PolyV>& coeffs, bool quad_ext = false);

struct RecSolveResult {
    std::vector<SumExpr> homogeneous;    // d'Alembertian basis found
    std::optional<SumExpr> particular;   // absent for rhs = 0 or when unreachable
    std::vector<RatFunV> certificates;   // first-order right-factor chain
    long unsolved_order = 0;             // order of the unfactored residual
    std::vector<RatFunV> residual_op;    // its coefficients when unsolved_order > 0
    long valid_from = 0;                 // emitted expressions defined from here on
};

// Factor the operator into first-order right factors as far as possible and
// build a particular solution by variation of constants through the chain.
RecSolveResult dalembert_solve(const std::vector<PolyV>& coeffs, const SumExpr& rhs,
                               const RecSolveOptions& opts = {});

// ---- epsilon-expansion layer -----------------------------------------------

// Recurrence with coefficients in Q[N][ep], stored ep-major.
struct EpsRec {
    std::vector<std::vector<PolyQ>> coeffs;  // [shift j][ep order t] -> c_{j,t}(N)
    long valid_from = 0;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    int eps_depth() const;
    // divide through by the largest common power of ep; returns that power
    int normalize_eps_power();
};

// Clear N- and ep-denominators of a shift operator; the same multiplier must
// be applied to the right-hand side (see eps_scale_mixed).
struct EpsRecConversion {
    EpsRec rec;
    SysRat multiplier;  // the equation was multiplied through by this
};
EpsRecConversion to_eps_rec(const OreOp& op, long valid_from);

struct EpsSolution {
    int low = 0;
    std::vector<SumExpr> orders;
    std::vector<long> ivs_consumed;
    std::vector<long> extra_requested;  // indices demanded beyond 0..m-1
};

// Solve order by order in ep: the ep^0 operator acts on the unknown order
// while lower orders, hit by higher ep-parts of the operator, move right.
// Initial values arrive as exact per-order numbers at integer indices.
EpsSolution eps_solve(const EpsRec& rec, const EpsLaurent& rhs,
                      const std::map<long, EpsValues>& initial_values, int win_lo, int win_hi,
                      const RecSolveOptions& opts = {});

// Match free constants of a solved recurrence against supplied values,
// propagating through the recurrence where defined.  Throws
// InsufficientInitialValues with the exact missing indices.
struct MatchedSolution {
    SumExpr solution;
    std::vector<long> used;
    std::vector<long> extra;
};
MatchedSolution match_initial_values(const std::vector<PolyV>& coeffs,
                                     const std::function<Value(long)>& rhs_at,
                                     const RecSolveResult& sol,
                                     const std::map<long, Value>& supplied, long valid_from,
                                     const RecSolveOptions& opts = {});

}  // namespace oresolve
