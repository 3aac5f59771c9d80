#pragma once

#include <vector>

#include "oresolve/ratfun.hpp"
#include "oresolve/sumexpr.hpp"

namespace oresolve {

// Truncated Laurent series in x with exact coefficients: coefficients for
// indices low .. high() are stored, indices below `low` are exactly zero,
// indices above high() are unknown.
struct XSeries {
    int low = 0;
    std::vector<Value> c;

    XSeries() = default;
    XSeries(int lo, std::vector<Value> cs) : low(lo), c(std::move(cs)) {}
    static XSeries zero(int len) { return XSeries(0, std::vector<Value>(static_cast<std::size_t>(len))); }

    int high() const { return low + static_cast<int>(c.size()) - 1; }
    Value at(int n) const;
    bool known_zero_through(int n) const;

    XSeries truncated(int lo, int hi) const;
};

XSeries xs_add(const XSeries& a, const XSeries& b);
XSeries xs_sub(const XSeries& a, const XSeries& b);
XSeries xs_mul(const XSeries& a, const XSeries& b);
XSeries xs_scale(const XSeries& a, const Value& v);
XSeries xs_derivative(const XSeries& a);

// Laurent expansion of a rational function at x = 0 with coefficients for
// indices <= upto.
XSeries ratfun_series(const RatFunV& f, int upto);
XSeries ratfun_series(const RatFunQ& f, int upto);

// Series sum_{n>=0} e(n) x^n for indices 0..upto via exact evaluation.
XSeries sumexpr_series(const SumExpr& e, int upto);

}  // namespace oresolve
