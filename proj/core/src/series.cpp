#include "oresolve/series.hpp"

#include <algorithm>

#include "oresolve/errors.hpp"

namespace oresolve {

Value XSeries::at(int n) const {
    if (n < low) return Value(0);
    if (n > high()) throw Error("XSeries: coefficient " + std::to_string(n) + " beyond truncation");
    return c[static_cast<std::size_t>(n - low)];
}

bool XSeries::known_zero_through(int n) const {
    for (int i = low; i <= std::min(n, high()); ++i)
        if (!at(i).is_zero()) return false;
    return n <= high();
}

XSeries XSeries::truncated(int lo, int hi) const {
    std::vector<Value> cs;
    for (int n = lo; n <= hi; ++n) cs.push_back(at(n));
    return XSeries(lo, std::move(cs));
}

XSeries xs_add(const XSeries& a, const XSeries& b) {
    int lo = std::min(a.low, b.low);
    int hi = std::min(a.high(), b.high());
    if (hi < lo) throw Error("XSeries: no common coefficients in addition");
    std::vector<Value> cs;
    for (int n = lo; n <= hi; ++n) cs.push_back(a.at(n) + b.at(n));
    return XSeries(lo, std::move(cs));
}

XSeries xs_sub(const XSeries& a, const XSeries& b) { return xs_add(a, xs_scale(b, Value(-1))); }

XSeries xs_mul(const XSeries& a, const XSeries& b) {
    int lo = a.low + b.low;
    int hi = std::min(a.low + b.high(), b.low + a.high());
    if (hi < lo) throw Error("XSeries: no common coefficients in multiplication");
    std::vector<Value> cs(static_cast<std::size_t>(hi - lo + 1), Value(0));
    for (int n = lo; n <= hi; ++n) {
        Value acc(0);
        for (int u = a.low; u <= n - b.low && u <= a.high(); ++u) acc += a.at(u) * b.at(n - u);
        cs[static_cast<std::size_t>(n - lo)] = std::move(acc);
    }
    return XSeries(lo, std::move(cs));
}

XSeries xs_scale(const XSeries& a, const Value& v) {
    XSeries out = a;
    for (auto& x : out.c) x *= v;
    return out;
}

XSeries xs_derivative(const XSeries& a) {
    std::vector<Value> cs;
    int lo = a.low - 1;
    for (int n = a.low; n <= a.high(); ++n) cs.push_back(a.at(n) * Value(n));
    // drop the constant term's zero slot at the front
    if (!cs.empty() && a.low == 0) {
        cs.erase(cs.begin());
        lo = 0;
    }
    return XSeries(lo, std::move(cs));
}

XSeries ratfun_series(const RatFunV& f, int upto) {
    if (f.is_zero()) return XSeries(0, std::vector<Value>(static_cast<std::size_t>(upto) + 1));
    const PolyV& num = f.num();
    const PolyV& den = f.den();
    long vd = 0;
    while (den.coeff(static_cast<std::size_t>(vd)).is_zero()) ++vd;
    long vn = 0;
    while (num.coeff(static_cast<std::size_t>(vn)).is_zero()) ++vn;
    int lo = static_cast<int>(vn - vd);
    int len = upto - lo + 1;
    if (len <= 0) return XSeries(lo, {});
    Value d0 = den.coeff(static_cast<std::size_t>(vd));
    std::vector<Value> h(static_cast<std::size_t>(len), Value(0));
    for (int t = 0; t < len; ++t) {
        Value acc = num.coeff(static_cast<std::size_t>(vn + t));
        for (int s = 0; s < t; ++s)
            acc -= h[static_cast<std::size_t>(s)] * den.coeff(static_cast<std::size_t>(vd + t - s));
        h[static_cast<std::size_t>(t)] = acc / d0;
    }
    return XSeries(lo, std::move(h));
}

XSeries ratfun_series(const RatFunQ& f, int upto) { return ratfun_series(to_value_ratfun(f), upto); }

XSeries sumexpr_series(const SumExpr& e, int upto) {
    std::vector<Value> cs;
    for (int n = 0; n <= upto; ++n) cs.push_back(e.eval(n));
    return XSeries(0, std::move(cs));
}

}  // namespace oresolve
