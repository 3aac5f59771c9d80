#include "oresolve/epslaurent.hpp"

#include <algorithm>

#include "oresolve/errors.hpp"

namespace oresolve {

SumExpr EpsLaurent::at(int order) const {
    if (order < low) return SumExpr::zero();
    if (order > high())
        throw EmptyWindow("EpsLaurent: order " + std::to_string(order) +
                          " beyond truncation window [" + std::to_string(low) + ".." +
                          std::to_string(high()) + "]");
    return coeffs[static_cast<std::size_t>(order - low)];
}

EpsLaurent EpsLaurent::truncated(int lo, int hi) const {
    if (hi < lo) throw EmptyWindow("EpsLaurent: empty truncation");
    if (hi > high())
        throw EmptyWindow("EpsLaurent: window [" + std::to_string(lo) + ".." + std::to_string(hi) +
                          "] exceeds known orders");
    std::vector<SumExpr> cs;
    for (int t = lo; t <= hi; ++t) cs.push_back(at(t));
    return EpsLaurent(lo, std::move(cs));
}

EpsLaurent EpsLaurent::normalized() const {
    EpsLaurent e = *this;
    for (auto& c : e.coeffs) c = c.normalized();
    // raise `low` past leading exact zeros
    while (!e.coeffs.empty() && e.coeffs.front().is_zero()) {
        e.coeffs.erase(e.coeffs.begin());
        ++e.low;
    }
    return e;
}

EpsLaurent eps_add(const EpsLaurent& a, const EpsLaurent& b) {
    int lo = std::min(a.low, b.low);
    int hi = std::min(a.high(), b.high());
    if (hi < lo) {
        // one window lies strictly above the other's knowledge horizon
        throw EmptyWindow("eps_add: no common orders");
    }
    std::vector<SumExpr> cs;
    for (int t = lo; t <= hi; ++t) cs.push_back(a.at(t) + b.at(t));
    return EpsLaurent(lo, std::move(cs));
}

EpsLaurent eps_sub(const EpsLaurent& a, const EpsLaurent& b) {
    EpsLaurent nb = b;
    for (auto& c : nb.coeffs) c = -c;
    return eps_add(a, nb);
}

EpsLaurent eps_mul(const EpsLaurent& a, const EpsLaurent& b) {
    int lo = a.low + b.low;
    int hi = std::min(a.low + b.high(), b.low + a.high());
    if (hi < lo) throw EmptyWindow("eps_mul: no common orders");
    std::vector<SumExpr> cs(static_cast<std::size_t>(hi - lo + 1));
    for (int t = lo; t <= hi; ++t) {
        SumExpr acc;
        for (int u = a.low; u <= t - b.low; ++u) {
            if (u > a.high()) break;
            acc += a.at(u) * b.at(t - u);
        }
        cs[static_cast<std::size_t>(t - lo)] = std::move(acc);
    }
    return EpsLaurent(lo, std::move(cs));
}

EpsLaurent eps_scale(const EpsLaurent& a, const EpsRat& q) {
    if (q.is_zero()) throw Error("eps_scale: zero multiplier (use a zero window instead)");
    int v = eps_valuation(q);
    int len = static_cast<int>(a.coeffs.size());
    std::vector<Rational> qc = eps_coeffs(q, v, len);
    std::vector<SumExpr> cs(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) {
        SumExpr acc;
        for (int u = 0; u <= t; ++u) {
            if (qc[static_cast<std::size_t>(u)].is_zero()) continue;
            acc += a.coeffs[static_cast<std::size_t>(t - u)].scaled(
                Value(qc[static_cast<std::size_t>(u)]));
        }
        cs[static_cast<std::size_t>(t)] = std::move(acc);
    }
    return EpsLaurent(a.low + v, std::move(cs));
}

EpsLaurent eps_scale_n(const EpsLaurent& a, const RatFunV& r) {
    EpsLaurent e = a;
    for (auto& c : e.coeffs) c = c.scaled(r);
    return e;
}

Value EpsValues::at(int order) const {
    if (order < low) return Value(0);
    if (order > high())
        throw EmptyWindow("EpsValues: order " + std::to_string(order) + " beyond window");
    return vals[static_cast<std::size_t>(order - low)];
}

EpsValues eps_values_add(const EpsValues& a, const EpsValues& b) {
    EpsValues out;
    out.low = std::min(a.low, b.low);
    int hi = std::min(a.high(), b.high());
    for (int t = out.low; t <= hi; ++t) out.vals.push_back(a.at(t) + b.at(t));
    return out;
}

EpsValues eps_values_scale(const EpsValues& a, const Value& c) {
    EpsValues out = a;
    for (auto& v : out.vals) v *= c;
    return out;
}

int eps_valuation(const EpsRat& q) {
    if (q.is_zero()) throw Error("eps_valuation: zero");
    auto val = [](const PolyQ& p) {
        for (long i = 0; i <= p.degree(); ++i)
            if (!p.coeff(static_cast<std::size_t>(i)).is_zero()) return i;
        return 0L;
    };
    return static_cast<int>(val(q.num()) - val(q.den()));
}

std::vector<Rational> eps_coeffs(const EpsRat& q, int from, int len) {
    std::vector<Rational> out(static_cast<std::size_t>(len), Rational(0));
    if (q.is_zero() || len <= 0) return out;
    auto strip = [](const PolyQ& p) {
        long v = 0;
        while (p.coeff(static_cast<std::size_t>(v)).is_zero()) ++v;
        std::vector<Rational> cs(p.coeffs().begin() + v, p.coeffs().end());
        return std::make_pair(v, PolyQ(p.var(), cs));
    };
    auto [vn, n] = strip(q.num());
    auto [vd, d] = strip(q.den());
    int v = static_cast<int>(vn - vd);
    // series n/d to enough terms, starting at ep^v
    int need = from + len - v;  // highest index into the regular part + 1
    if (need <= 0) return out;
    std::vector<Rational> h(static_cast<std::size_t>(need), Rational(0));
    Rational d0 = d.coeff(0);
    for (int t = 0; t < need; ++t) {
        Rational acc = n.coeff(static_cast<std::size_t>(t));
        for (int s = 0; s < t; ++s) acc -= h[static_cast<std::size_t>(s)] * d.coeff(static_cast<std::size_t>(t - s));
        h[static_cast<std::size_t>(t)] = acc / d0;
    }
    for (int t = 0; t < len; ++t) {
        int idx = from + t - v;
        if (idx >= 0 && idx < need) out[static_cast<std::size_t>(t)] = h[static_cast<std::size_t>(idx)];
    }
    return out;
}

namespace detail_eps {

struct Majors {
    std::vector<PolyQ> num, den;  // ep-major, leading entries nonzero
    int valuation = 0;            // ep valuation of the quotient
    bool zero = false;
};

// reorganize a Poly in N over Q(ep) as an ep-major list of PolyQ in N
std::pair<std::vector<PolyQ>, PolyQ> swap_major(const Poly<EpsRat>& p) {
    PolyQ d(Rational(1));
    for (const auto& coef : p.coeffs()) d = poly_lcm(d, coef.den());
    long maxt = 0;
    std::vector<PolyQ> cleared;  // per N-power, polynomial in ep
    for (const auto& coef : p.coeffs()) {
        PolyQ c2 = coef.num() * d.exact_div(coef.den());
        cleared.push_back(c2);
        maxt = std::max(maxt, c2.degree());
    }
    std::vector<PolyQ> major(static_cast<std::size_t>(maxt + 1));
    for (long t = 0; t <= maxt; ++t) {
        std::vector<Rational> ncoeffs;
        for (const auto& c2 : cleared) ncoeffs.push_back(c2.coeff(static_cast<std::size_t>(t)));
        major[static_cast<std::size_t>(t)] = PolyQ("N", ncoeffs);
    }
    while (!major.empty() && major.back().is_zero()) major.pop_back();
    return {major, d};
}

std::vector<PolyQ> fold(std::vector<PolyQ> major, const PolyQ& epoly) {
    if (major.empty()) return {};
    std::vector<PolyQ> out(major.size() + static_cast<std::size_t>(epoly.degree()),
                           PolyQ(Rational(0)));
    for (std::size_t i = 0; i < major.size(); ++i)
        for (long t = 0; t <= epoly.degree(); ++t) {
            auto& slot = out[i + static_cast<std::size_t>(t)];
            slot = slot + major[i].scaled(epoly.coeff(static_cast<std::size_t>(t)));
        }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

Majors nrat_majors(const RatFun<EpsRat>& c) {
    Majors m;
    if (c.is_zero()) {
        m.zero = true;
        return m;
    }
    // each side is cleared by its own lcm: c = (nm/d1)/(dm/d2) = nm*d2/(dm*d1)
    auto [nm, d1] = swap_major(c.num());
    auto [dm, d2] = swap_major(c.den());
    m.num = fold(nm, d2);
    m.den = fold(dm, d1);
    auto strip = [](std::vector<PolyQ>& v) {
        int k = 0;
        while (!v.empty() && v.front().is_zero()) {
            v.erase(v.begin());
            ++k;
        }
        return k;
    };
    int vn = strip(m.num);
    int vd = strip(m.den);
    if (m.num.empty()) {
        m.zero = true;
        return m;
    }
    if (m.den.empty()) throw Error("eps expansion: zero denominator");
    m.valuation = vn - vd;
    return m;
}

int nrat_valuation(const RatFun<EpsRat>& c) {
    Majors m = nrat_majors(c);
    if (m.zero) throw Error("eps valuation of zero");
    return m.valuation;
}

}  // namespace detail_eps

int eps_valuation_nrat(const RatFun<EpsRat>& c) { return detail_eps::nrat_valuation(c); }

std::vector<RatFunV> eps_expand_nrat(const RatFun<EpsRat>& c, int from, int len) {
    std::vector<RatFunV> out(static_cast<std::size_t>(len), RatFunV(Value(0)));
    if (len <= 0) return out;
    detail_eps::Majors m = detail_eps::nrat_majors(c);
    if (m.zero) return out;
    int v = m.valuation;
    int need = from + len - v;
    if (need <= 0) return out;
    std::vector<RatFunQ> h(static_cast<std::size_t>(need), RatFunQ(Rational(0)));
    RatFunQ d0{m.den[0]};
    auto num_at = [&](int t) {
        return t < static_cast<int>(m.num.size()) ? RatFunQ(m.num[static_cast<std::size_t>(t)])
                                                  : RatFunQ(Rational(0));
    };
    auto den_at = [&](int t) {
        return t < static_cast<int>(m.den.size()) ? RatFunQ(m.den[static_cast<std::size_t>(t)])
                                                  : RatFunQ(Rational(0));
    };
    for (int t = 0; t < need; ++t) {
        RatFunQ acc = num_at(t);
        for (int s = 0; s < t; ++s) acc -= h[static_cast<std::size_t>(s)] * den_at(t - s);
        h[static_cast<std::size_t>(t)] = acc / d0;
    }
    for (int t = 0; t < len; ++t) {
        int idx = from + t - v;
        if (idx >= 0 && idx < need)
            out[static_cast<std::size_t>(t)] = to_value_ratfun(h[static_cast<std::size_t>(idx)]);
    }
    return out;
}

EpsLaurent eps_scale_mixed(const EpsLaurent& a, const RatFun<EpsRat>& m) {
    if (m.is_zero()) throw Error("eps_scale_mixed: zero multiplier");
    int v = eps_valuation_nrat(m);
    int len = static_cast<int>(a.coeffs.size());
    std::vector<RatFunV> mc = eps_expand_nrat(m, v, len);
    std::vector<SumExpr> cs(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) {
        SumExpr acc;
        for (int u = 0; u <= t; ++u) {
            if (mc[static_cast<std::size_t>(u)].is_zero()) continue;
            acc += a.coeffs[static_cast<std::size_t>(t - u)].scaled(mc[static_cast<std::size_t>(u)]);
        }
        cs[static_cast<std::size_t>(t)] = std::move(acc);
    }
    return EpsLaurent(a.low + v, std::move(cs));
}

}  // namespace oresolve
