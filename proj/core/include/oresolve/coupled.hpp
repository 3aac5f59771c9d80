#pragma once

#include <optional>

#include "oresolve/linalg.hpp"
#include "oresolve/oreop.hpp"

namespace oresolve {

// Coupled linear system sum_l A_l sigma^l I = rhs with r x r matrices over
// Q(ep)(x) or Q(ep)(N).  First-order derivative systems D I = A I + b are
// stored as mats = { -A, Id }.
struct CoupledSystem {
    OreKind kind = OreKind::Shift;
    std::vector<Matrix<SysRat>> mats;  // A_0 .. A_m
    std::vector<RhsComb> rhs;          // length dim()

    std::size_t dim() const { return mats.empty() ? 0 : mats[0].rows; }
    long order() const { return static_cast<long>(mats.size()) - 1; }

    static CoupledSystem first_order(OreKind kind, const Matrix<SysRat>& A,
                                     std::vector<RhsComb> rhs);

    // For an explicit first-order system (mats = {A0, Id}) the matrix A with
    // sigma I = A I + rhs.
    std::optional<Matrix<SysRat>> explicit_matrix() const;
};

// Companion reduction of a higher-order shift system to first order.
struct FirstOrderReduction {
    CoupledSystem sys;                    // order <= 1, possibly implicit
    std::vector<std::size_t> base_slot;   // original unknown i lives in slot base_slot[i]
    std::vector<long> heights;            // n_i: slots base_slot[i] .. +n_i-1 hold I_i(N+j)
};

FirstOrderReduction to_first_order(const CoupledSystem& sys);

// Rule produced while regularizing: eliminated unknown (at argument N)
// expressed over surviving unknowns at N and the named right-hand sides.
struct LinearRule {
    std::size_t unknown;                                // index in the input system
    std::vector<std::pair<std::size_t, SysRat>> deps;   // (surviving input index, coeff)
    RhsComb b_part;
};

struct RegularizeResult {
    CoupledSystem sys;                   // explicit first order, invertible matrix (or dim 0)
    std::vector<std::size_t> survivors;  // new index -> input index
    std::vector<LinearRule> rules;       // for every eliminated input unknown
    bool changed = false;
};

// Reduce a (possibly implicit) first-order shift or derivative system to an
// explicit one with an invertible matrix, eliminating redundant unknowns by
// row and column operations.  Throws DegenerateSystem for inconsistent or
// underdetermined pencils.
RegularizeResult regularize(const CoupledSystem& sys);

std::string coupled_str(const CoupledSystem& sys, const std::vector<std::string>& unknown_names,
                        const std::vector<std::string>& rhs_names);

}  // namespace oresolve
