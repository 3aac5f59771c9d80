#pragma once

#include <vector>

#include "oresolve/factor.hpp"
#include "oresolve/ratfun.hpp"

namespace oresolve {

// q(x) = poly_part(x) + sum coeff / (x - root)^power, with roots in Q or one
// quadratic extension.
struct PartialFractions {
    struct Term {
        Value root;
        std::size_t power;
        Value coeff;
    };
    PolyV poly_part;
    std::vector<Term> terms;

    RatFunV recombine(const std::string& var) const;
};

// Decompose over the exact roots of the denominator.  Throws
// IrreducibleDegreeTooHigh if the denominator has an irreducible factor of
// degree >= 3.
PartialFractions partial_fractions(const RatFunQ& q);

}  // namespace oresolve
