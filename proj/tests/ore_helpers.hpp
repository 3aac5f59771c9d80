#pragma once

// Shared sequence/series machinery for exercising coupled systems in tests:
// systems are built FROM known solutions, so every check is a substitution
// identity rather than a solve.

#include <random>
#include <vector>

#include "oresolve/coupled.hpp"
#include "oresolve/parse.hpp"
#include "oresolve/series.hpp"
#include "oresolve/uncouple.hpp"

namespace oretest {

using namespace oresolve;

using Seq = std::vector<Rational>;  // values at N = 0,1,2,...

inline SysRat SR(const std::string& s, const std::string& var = "N") {
    return parse_ratfun_eps(s, var);
}

inline Rational sysval(const SysRat& f, long n, const Rational& eps = Rational(0)) {
    EpsRat v = f.eval(EpsRat(Rational(n)));
    return v.eval(eps);
}

// sum over comb of coeff(n) * b_j[n + power]
inline Rational rhs_comb_value(const RhsComb& comb, const std::vector<Seq>& b, long n,
                               const Rational& eps = Rational(0)) {
    Rational acc(0);
    for (const auto& r : comb) {
        long idx = n + r.power;
        if (idx < 0 || idx >= static_cast<long>(b[r.j].size()))
            throw Error("rhs_comb_value: b sequence too short");
        acc += sysval(r.coeff, n, eps) * b[r.j][static_cast<std::size_t>(idx)];
    }
    return acc;
}

// residual of row `row` of a shift system at N = n
inline Rational system_row_residual(const CoupledSystem& sys, const std::vector<Seq>& I,
                                    const std::vector<Seq>& b, std::size_t row, long n) {
    Rational acc(0);
    for (long l = 0; l <= sys.order(); ++l)
        for (std::size_t i = 0; i < sys.dim(); ++i) {
            const SysRat& c = sys.mats[static_cast<std::size_t>(l)].at(row, i);
            if (c.is_zero()) continue;
            acc += sysval(c, n) * I[i][static_cast<std::size_t>(n + l)];
        }
    return acc - rhs_comb_value(sys.rhs[row], b, n);
}

}  // namespace oretest
