#include "oresolve/holonomic.hpp"

#include <algorithm>
#include <map>

#include "oresolve/parse.hpp"

namespace oresolve {

SysRat falling_factorial(long p, long i) {
    Poly<EpsRat> acc{EpsRat(1)};
    Poly<EpsRat> n = Poly<EpsRat>::variable("N");
    for (long t = 0; t < i; ++t) acc *= n + Poly<EpsRat>(EpsRat(Rational(p - t)));
    return SysRat(acc);
}

namespace {

// clear lhs denominators; returns the cleared ODE
ScalarODE clear_lhs(const ScalarODE& ode) {
    Poly<EpsRat> l{EpsRat(1)};
    for (const auto& a : ode.op.coeffs) l = poly_lcm(l, a.den());
    if (l.is_one()) return ode;
    ScalarODE out = ode;
    SysRat lf{l};
    for (auto& a : out.op.coeffs) a *= lf;
    for (auto& r : out.rhs) r.coeff *= lf;
    return out;
}

}  // namespace

ScalarRec ode_to_rec(const ScalarODE& ode_in, bool allow_rational_rhs) {
    if (ode_in.op.kind != OreKind::Derivative) throw Error("ode_to_rec: expected an ODE");
    ScalarODE ode = clear_lhs(ode_in);
    const long rho = ode.op.order();
    long maxdeg = 0;
    for (const auto& a : ode.op.coeffs) maxdeg = std::max(maxdeg, a.num().degree());

    // collect lhs shifts: x^s D^i f contributes ff(N+i-s, i) f(N+i-s)
    std::map<long, SysRat> cpoly;  // shift p -> polynomial coefficient in N
    long n0 = 0;                   // comparisons below n0 need side relations
    for (long i = 0; i <= rho; ++i) {
        const SysRat& a = ode.op.coeffs[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        const Poly<EpsRat>& ap = a.num();
        for (long s = 0; s <= ap.degree(); ++s) {
            EpsRat c = ap.coeff(static_cast<std::size_t>(s));
            if (c.is_zero()) continue;
            long p = i - s;
            SysRat term = falling_factorial(p, i) * SysRat(c);
            auto it = cpoly.find(p);
            if (it == cpoly.end())
                cpoly.emplace(p, term);
            else
                it->second += term;
            n0 = std::max(n0, s - i);
        }
    }
    for (auto it = cpoly.begin(); it != cpoly.end();)
        it = it->second.is_zero() ? cpoly.erase(it) : std::next(it);
    if (cpoly.empty()) throw Error("ode_to_rec: the equation collapsed to 0 = rhs");

    long pmin = cpoly.begin()->first;
    long pmax = cpoly.rbegin()->first;

    // rhs: polynomial multipliers produce b_j(N+k-s) terms, rational ones stay
    struct RhsPoly {
        std::size_t j;
        long p;
        SysRat coeff;
    };
    std::vector<RhsPoly> rhs_terms;
    std::vector<RhsRef> rational;
    for (const auto& r : ode.rhs) {
        if (r.coeff.is_zero()) continue;
        if (!r.coeff.is_polynomial()) {
            if (!allow_rational_rhs)
                throw NonPolynomialRhs("ode_to_rec: rational multiplier " +
                                       sysrat_str(r.coeff) + " on D^" + std::to_string(r.power) +
                                       " b" + std::to_string(r.j + 1));
            rational.push_back(r);
            continue;
        }
        const Poly<EpsRat>& dp = r.coeff.num();
        for (long s = 0; s <= dp.degree(); ++s) {
            EpsRat c = dp.coeff(static_cast<std::size_t>(s));
            if (c.is_zero()) continue;
            long p = r.power - s;
            rhs_terms.push_back({r.j, p, falling_factorial(p, r.power) * SysRat(c)});
            n0 = std::max(n0, s - r.power);
        }
    }

    // reindex so the lowest f shift becomes 0: the recurrence index K equals
    // the comparison index n plus pmin, i.e. n = K - pmin
    ScalarRec rec;
    rec.op.kind = OreKind::Shift;
    rec.comparison_shift = pmin;
    long m = pmax - pmin;
    rec.op.coeffs.assign(static_cast<std::size_t>(m) + 1, SysRat(0));
    for (const auto& [p, c] : cpoly)
        rec.op.coeffs[static_cast<std::size_t>(p - pmin)] = c.shifted(-pmin);
    RhsComb comb;
    for (const auto& t : rhs_terms) comb.push_back({t.j, t.p - pmin, t.coeff.shifted(-pmin)});
    rec.rhs = rhs_normalized(std::move(comb));
    rec.rational_rhs = std::move(rational);
    rec.valid_from = std::max(0L, n0 + pmin);

    if (m > maxdeg + rho)
        throw Error("ode_to_rec: order bound violated (internal invariant)");

    // exact relations for comparisons n = 0 .. n0-1
    for (long n = 0; n < n0; ++n) {
        SideRelation sr;
        sr.n = n;
        for (long i = 0; i <= rho; ++i) {
            const SysRat& a = ode.op.coeffs[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            for (long s = 0; s <= a.num().degree(); ++s) {
                EpsRat c = a.num().coeff(static_cast<std::size_t>(s));
                if (c.is_zero()) continue;
                long idx = n + i - s;
                if (idx < 0) continue;
                EpsRat ff(1);
                for (long t = 0; t < i; ++t) ff *= EpsRat(Rational(idx - t));
                if (ff.is_zero()) continue;
                bool merged = false;
                for (auto& [pidx, pc] : sr.lhs)
                    if (pidx == idx) {
                        pc += c * ff;
                        merged = true;
                    }
                if (!merged) sr.lhs.emplace_back(idx, c * ff);
            }
        }
        for (const auto& r : ode.rhs) {
            if (r.coeff.is_zero() || !r.coeff.is_polynomial()) continue;
            for (long s = 0; s <= r.coeff.num().degree(); ++s) {
                EpsRat c = r.coeff.num().coeff(static_cast<std::size_t>(s));
                if (c.is_zero()) continue;
                long idx = n + r.power - s;
                if (idx < 0) continue;
                EpsRat ff(1);
                for (long t = 0; t < r.power; ++t) ff *= EpsRat(Rational(idx - t));
                if (ff.is_zero()) continue;
                sr.rhs.emplace_back(r.j, idx, c * ff);
            }
        }
        for (const auto& r : rec.rational_rhs) sr.rational.push_back(r);
        sr.lhs.erase(std::remove_if(sr.lhs.begin(), sr.lhs.end(),
                                    [](const auto& p) { return p.second.is_zero(); }),
                     sr.lhs.end());
        rec.side.push_back(std::move(sr));
    }
    return rec;
}

ScalarODE gcd_reduce(const ScalarODE& ode_in) {
    ScalarODE ode = clear_lhs(ode_in);
    Poly<EpsRat> g;
    for (const auto& a : ode.op.coeffs) g = poly_gcd(g, a.num());
    if (g.degree() <= 0) return ode;
    SysRat gf{g};
    ScalarODE out = ode;
    for (auto& a : out.op.coeffs) a = SysRat(a.num().exact_div(g));
    for (auto& r : out.rhs) r.coeff /= gf;
    return out;
}

}  // namespace oresolve
