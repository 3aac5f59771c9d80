#include "oresolve/partfrac.hpp"

#include "oresolve/errors.hpp"

namespace oresolve {

namespace {

// First `count` Taylor coefficients of num/den around the point rho;
// den(rho) must be nonzero.
std::vector<Value> taylor_quotient(const PolyV& num, const PolyV& den, const Value& rho,
                                   std::size_t count) {
    std::string var = num.var().empty() ? den.var() : num.var();
    PolyV shift(var, {rho, Value(1)});  // u + rho
    PolyV n = num.compose(shift);
    PolyV d = den.compose(shift);
    Value d0 = d.coeff(0);
    if (d0.is_zero()) throw Error("taylor_quotient: expansion point is a pole");
    std::vector<Value> h(count, Value(0));
    for (std::size_t t = 0; t < count; ++t) {
        Value acc = n.coeff(t);
        for (std::size_t s = 0; s < t; ++s) acc -= h[s] * d.coeff(t - s);
        h[t] = acc / d0;
    }
    return h;
}

}  // namespace

RatFunV PartialFractions::recombine(const std::string& var) const {
    RatFunV acc{poly_part};
    for (const auto& t : terms) {
        PolyV lin(var, {-t.root, Value(1)});
        acc += RatFunV(PolyV(t.coeff), lin.pow(t.power));
    }
    return acc;
}

PartialFractions partial_fractions(const RatFunQ& q) {
    PartialFractions out;
    const std::string var = q.num().var().empty() ? q.den().var() : q.num().var();
    auto [polypart, rem] = divmod(q.num(), q.den());
    out.poly_part = to_value_poly(polypart);
    if (rem.is_zero()) return out;

    Factorization fac = factor_over_q(q.den());
    // collect every exact root with its multiplicity
    std::vector<std::pair<Value, std::size_t>> roots;
    if (fac.zero_root_multiplicity > 0) roots.emplace_back(Value(0), fac.zero_root_multiplicity);
    for (const auto& f : fac.factors) {
        for (const auto& r : exact_roots(f.poly)) roots.emplace_back(r, f.multiplicity);
    }

    PolyV den = to_value_poly(q.den());
    PolyV num = to_value_poly(rem);
    for (const auto& [rho, nu] : roots) {
        PolyV lin(var, {-rho, Value(1)});
        PolyV g = den.exact_div(lin.pow(nu));
        auto h = taylor_quotient(num, g, rho, nu);
        for (std::size_t t = 0; t < nu; ++t) {
            if (h[t].is_zero()) continue;
            out.terms.push_back({rho, nu - t, h[t]});
        }
    }
    return out;
}

}  // namespace oresolve
