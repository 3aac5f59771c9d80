#pragma once

#include <string>
#include <vector>

#include "oresolve/epslaurent.hpp"
#include "oresolve/ratfun.hpp"

namespace oresolve {

// Coefficient field for systems and operators: rational functions in x or N
// over Q(ep).  ep stays symbolic through uncoupling and conversion; the
// epsilon expansion happens at solving time.
using SysRat = RatFun<EpsRat>;

enum class OreKind { Shift, Derivative };

// Scalar Ore operator sum_i coeffs[i] * sigma^i with sigma the shift in N or
// the derivative in x.
struct OreOp {
    OreKind kind = OreKind::Shift;
    std::vector<SysRat> coeffs;  // 0..order; leading coefficient nonzero

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
};

// One reference coeff * sigma^power b_j inside a right-hand side.
struct RhsRef {
    std::size_t j;
    long power;
    SysRat coeff;
};

// Linear combination of (shifted/differentiated) named right-hand sides.
using RhsComb = std::vector<RhsRef>;

RhsComb rhs_normalized(RhsComb c);
RhsComb rhs_add(const RhsComb& a, const RhsComb& b);
RhsComb rhs_scale(const RhsComb& a, const SysRat& f);
// apply sigma once: shift case shifts coefficients and powers, derivative
// case applies the product rule
RhsComb rhs_sigma(const RhsComb& a, OreKind kind);

std::string sysrat_str(const SysRat& r);
std::string rhs_comb_str(const RhsComb& c, const std::vector<std::string>& names);
std::string oreop_str(const OreOp& op);

inline SysRat sysrat_from_rational(const Rational& r) { return SysRat(EpsRat(r)); }

// Convert a coefficient free of ep into Q; throws if ep survives.
Rational sysrat_to_rational(const SysRat& r);

}  // namespace oresolve
