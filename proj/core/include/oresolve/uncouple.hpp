#pragma once

#include "oresolve/coupled.hpp"

namespace oresolve {

// A solved block: the scalar operator annihilating J = sum combo_i I_i up to
// the right-hand side combination.  combo is a unit vector except when the
// elimination had to fall back to a constant change of unknowns.
struct UncoupledBlock {
    std::size_t index;             // representative unknown (combo[index] != 0)
    std::vector<EpsRat> combo;     // constants over Q(ep)
    OreOp op;                      // order = block closure dimension
    RhsComb rhs;

    bool plain() const;
};

// Expression of a non-block unknown over the solved blocks and the b_j.
struct ComplementRule {
    std::size_t unknown;
    // (block, sigma power, coeff)
    std::vector<std::tuple<std::size_t, long, SysRat>> solved_refs;
    RhsComb b_refs;
};

struct UncoupleResult {
    OreKind kind = OreKind::Shift;
    std::vector<UncoupledBlock> blocks;
    std::vector<ComplementRule> rules;
};

// Uncouple an explicit first-order system sigma I = A I + rhs into scalar
// operators for a subset of (combinations of) unknowns plus complement rules
// for the rest.  The sum of scalar orders never exceeds dim.  Throws
// PivotFailure when no covering set of independent blocks exists (unreachable
// for invertible A).
UncoupleResult uncouple(const CoupledSystem& sys);

std::string uncouple_result_str(const UncoupleResult& res,
                                const std::vector<std::string>& unknown_names,
                                const std::vector<std::string>& rhs_names);

}  // namespace oresolve
