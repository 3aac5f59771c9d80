#pragma once

#include <optional>
#include <vector>

#include "oresolve/poly.hpp"
#include "oresolve/ratfun.hpp"

namespace oresolve {

// Complete factorization over Q:
//   input = constant * v^zero_root_multiplicity * prod_i factors[i].poly^factors[i].multiplicity
// with every listed factor monic, irreducible over Q and coprime to the rest.
struct Factorization {
    struct Entry {
        PolyQ poly;           // monic irreducible, degree >= 1, nonzero constant term
        std::size_t multiplicity;
    };
    Rational constant;
    std::size_t zero_root_multiplicity = 0;
    std::vector<Entry> factors;

    PolyQ recombine(const std::string& var) const;
};

// Factor a nonzero polynomial into irreducibles over Q.  Linear factors are
// split off exactly; residual factors are probed for quadratic and cubic
// divisors (integer coefficient search, complete for small coefficients) and
// otherwise kept unsplit.
Factorization factor_over_q(const PolyQ& p);

// All rational roots with multiplicity, cheapest first.
std::vector<std::pair<Rational, std::size_t>> rational_roots(const PolyQ& p);

// Integer roots only (used for pole/zero screening of product ratios).
std::vector<long> integer_roots(const PolyQ& p);
std::vector<long> integer_roots(const PolyV& p);

// Exact roots of a monic irreducible factor of degree <= 2, in Q or one
// quadratic extension.  Throws IrreducibleDegreeTooHigh beyond degree 2.
std::vector<Value> exact_roots(const PolyQ& factor);

// Yun square-free decomposition: returns g_1, g_2, ... with
// p = lc * prod g_i^i and the g_i monic, square-free, pairwise coprime.
std::vector<PolyQ> squarefree_decomposition(const PolyQ& p);

}  // namespace oresolve
