#pragma once

#include <vector>

#include "oresolve/ratfun.hpp"
#include "oresolve/sumexpr.hpp"

namespace oresolve {

// Truncated Laurent series in ep with SumExpr coefficients for orders
// low .. low+len-1.  Below `low` the series is exactly zero; above the window
// it is unknown (truncated).
struct EpsLaurent {
    int low = 0;
    std::vector<SumExpr> coeffs;

    EpsLaurent() = default;
    EpsLaurent(int lo, std::vector<SumExpr> cs) : low(lo), coeffs(std::move(cs)) {}
    static EpsLaurent zero(int lo, int len) {
        return EpsLaurent(lo, std::vector<SumExpr>(static_cast<std::size_t>(len)));
    }
    static EpsLaurent single(int order, SumExpr c) {
        return EpsLaurent(order, {std::move(c)});
    }

    int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
    bool covers(int order) const { return order <= high(); }

    // coefficient of ep^order; exact zero below the window, error above it
    SumExpr at(int order) const;

    EpsLaurent truncated(int lo, int hi) const;
    EpsLaurent normalized() const;
};

EpsLaurent eps_add(const EpsLaurent& a, const EpsLaurent& b);
EpsLaurent eps_sub(const EpsLaurent& a, const EpsLaurent& b);
EpsLaurent eps_mul(const EpsLaurent& a, const EpsLaurent& b);
// multiply by an exact rational function of ep (known to all orders)
EpsLaurent eps_scale(const EpsLaurent& a, const EpsRat& q);
// multiply every order by a rational function of N
EpsLaurent eps_scale_n(const EpsLaurent& a, const RatFunV& r);

// Numeric counterpart used for initial values: per-order exact numbers.
struct EpsValues {
    int low = 0;
    std::vector<Value> vals;

    int high() const { return low + static_cast<int>(vals.size()) - 1; }
    bool covers(int order) const { return order <= high(); }
    Value at(int order) const;
};

EpsValues eps_values_add(const EpsValues& a, const EpsValues& b);
EpsValues eps_values_scale(const EpsValues& a, const Value& c);

// ep-adic valuation of a nonzero rational function of ep.
int eps_valuation(const EpsRat& q);
// Laurent coefficients of q for orders from .. from+len-1.
std::vector<Rational> eps_coeffs(const EpsRat& q, int from, int len);

// Laurent expansion in ep of a rational function of N over Q(ep); the
// returned coefficients are rational functions of N.
std::vector<RatFunV> eps_expand_nrat(const RatFun<EpsRat>& c, int from, int len);
// its leading ep order
int eps_valuation_nrat(const RatFun<EpsRat>& c);

// Multiply by a rational function of N and ep (exact, known to all orders).
EpsLaurent eps_scale_mixed(const EpsLaurent& a, const RatFun<EpsRat>& m);

}  // namespace oresolve
