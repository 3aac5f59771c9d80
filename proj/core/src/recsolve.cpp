#include "oresolve/recsolve.hpp"

#include <algorithm>

#include "oresolve/factor.hpp"
#include "oresolve/harmonic.hpp"
#include "oresolve/linalg.hpp"
#include "oresolve/parse.hpp"

namespace oresolve {

namespace {

std::vector<PolyV> trim_op(std::vector<PolyV> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

// binomial C(d, s) as a polynomial in the symbolic degree d
PolyV binom_poly(long s) {
    PolyV acc{Value(1)};
    PolyV d = PolyV::variable("d");
    Rational fact(1);
    for (long t = 0; t < s; ++t) {
        acc *= d - PolyV(Value(t));
        fact *= Rational(t + 1);
    }
    return acc.scaled(Value(fact.inverse()));
}

}  // namespace

std::vector<PolyV> poly_solutions(const std::vector<PolyV>& coeffs_in) {
    std::vector<PolyV> coeffs = trim_op(coeffs_in);
    if (coeffs.empty()) throw Error("poly_solutions: zero operator");
    const long m = static_cast<long>(coeffs.size()) - 1;
    long K = 0;
    for (const auto& c : coeffs) K = std::max(K, c.degree());

    // leading-cancellation analysis: the coefficient of N^(K+d-t) in
    // L(N^d) is beta_t(d); the first nonzero beta bounds admissible degrees
    const long T = K + m + 2;
    long bound = T;  // analysis below is valid for degrees >= T
    for (long t = 0; t <= T; ++t) {
        PolyV beta;
        for (long j = 0; j <= m; ++j) {
            const PolyV& cj = coeffs[static_cast<std::size_t>(j)];
            for (long i = 0; i <= cj.degree(); ++i) {
                Value g = cj.coeff(static_cast<std::size_t>(i));
                if (g.is_zero()) continue;
                long s = i + t - K;
                if (s < 0) continue;
                beta += binom_poly(s).scaled(g * Value(j).pow(s));
            }
        }
        if (beta.is_zero()) continue;
        for (long rt : integer_roots(beta)) bound = std::max(bound, rt);
        break;
    }

    // ansatz of the full bound; nullspace = all polynomial solutions
    const long B = bound;
    Matrix<Value> sys(static_cast<std::size_t>(K + B + 2), static_cast<std::size_t>(B + 1));
    for (long s = 0; s <= B; ++s) {
        // L(N^s) = sum_j c_j(N) (N+j)^s
        PolyV img;
        for (long j = 0; j <= m; ++j) {
            PolyV shifted = PolyV::monomial("N", Value(1), static_cast<std::size_t>(s))
                                .compose(PolyV("N", {Value(j), Value(1)}));
            img += coeffs[static_cast<std::size_t>(j)] * shifted;
        }
        for (long row = 0; row <= img.degree(); ++row)
            sys.at(static_cast<std::size_t>(row), static_cast<std::size_t>(s)) =
                img.coeff(static_cast<std::size_t>(row));
    }
    std::vector<PolyV> out;
    for (const auto& v : nullspace_basis(sys)) {
        PolyV p("N", v);
        if (p.is_zero()) continue;
        out.push_back(p.monic());
    }
    std::sort(out.begin(), out.end(), [](const PolyV& a, const PolyV& b) { return a.cmp(b) < 0; });
    return out;
}

namespace {

bool rational_coeffs(const std::vector<PolyV>& coeffs, std::vector<PolyQ>& out) {
    out.clear();
    for (const auto& c : coeffs) {
        std::vector<Rational> cs;
        for (const auto& v : c.coeffs()) {
            if (!v.is_rational()) return false;
            cs.push_back(v.rational_part());
        }
        out.emplace_back("N", cs);
    }
    return true;
}

// all monic divisors of p over Q (products of subsets of irreducible factors)
std::vector<PolyQ> monic_divisors(const PolyQ& p) {
    Factorization fac = factor_over_q(p);
    std::vector<PolyQ> divs{PolyQ(Rational(1))};
    auto extend = [&](const PolyQ& f, std::size_t mult) {
        std::vector<PolyQ> next;
        for (const auto& d : divs) {
            PolyQ acc = d;
            next.push_back(acc);
            for (std::size_t e = 1; e <= mult; ++e) {
                acc = acc * f;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    };
    if (fac.zero_root_multiplicity > 0)
        extend(PolyQ::variable(p.var().empty() ? "N" : p.var()), fac.zero_root_multiplicity);
    for (const auto& e : fac.factors) extend(e.poly, e.multiplicity);
    if (divs.size() > 4096) divs.resize(4096);
    return divs;
}

std::vector<Value> z_candidates(const PolyQ& zpoly, bool quad_ext) {
    std::vector<Value> out;
    for (const auto& [r, mult] : rational_roots(zpoly)) {
        (void)mult;
        if (!r.is_zero()) out.emplace_back(r);
    }
    if (quad_ext) {
        for (const auto& e : factor_over_q(zpoly).factors) {
            if (e.poly.degree() != 2) continue;
            Rational b = e.poly.coeff(1), c = e.poly.coeff(0);
            Rational disc = b * b - Rational(4) * c;
            if (disc.sign() <= 0) continue;  // complex or double root handled elsewhere
            for (const auto& root : exact_roots(e.poly))
                if (!root.is_zero()) out.push_back(root);
        }
    }
    std::sort(out.begin(), out.end(), [](const Value& a, const Value& b) { return a.cmp(b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<RatFunV> hyper_solutions(const std::vector<PolyV>& coeffs_in, bool quad_ext) {
    std::vector<PolyV> coeffs = trim_op(coeffs_in);
    if (coeffs.size() < 2) return {};
    const long m = static_cast<long>(coeffs.size()) - 1;

    std::vector<PolyQ> pq;
    if (!rational_coeffs(coeffs, pq)) {
        // beyond Q the enumeration of factors is unavailable; order one still
        // has the explicit ratio
        if (m == 1) {
            RatFunV r(-coeffs[0], coeffs[1]);
            return {r};
        }
        return {};
    }
    if (pq.front().is_zero()) throw Error("hyper_solutions: zero trailing coefficient");

    std::vector<RatFunV> ratios;
    auto push_ratio = [&](const RatFunV& r) {
        for (const auto& x : ratios)
            if (x.cmp(r) == 0) return;
        ratios.push_back(r);
    };

    std::vector<PolyQ> as = monic_divisors(pq.front());
    std::vector<PolyQ> bs = monic_divisors(pq.back().shifted(-(m - 1)));
    for (const auto& a : as) {
        for (const auto& b : bs) {
            // Gosper-Petkovsek: gcd(a(N), b(N+h)) = 1 for all h >= 0
            bool ok = true;
            for (long h = 0; ok && h <= a.degree() + b.degree(); ++h)
                if (poly_gcd(a, b.shifted(h)).degree() > 0) ok = false;
            if (!ok) continue;

            // leading-coefficient equation for z
            long D = -1;
            for (long j = 0; j <= m; ++j) {
                long dj = pq[static_cast<std::size_t>(j)].degree() + j * a.degree() +
                          (m - j) * b.degree();
                D = std::max(D, dj);
            }
            std::vector<Rational> zc(static_cast<std::size_t>(m) + 1, Rational(0));
            for (long j = 0; j <= m; ++j) {
                long dj = pq[static_cast<std::size_t>(j)].degree() + j * a.degree() +
                          (m - j) * b.degree();
                if (dj == D) zc[static_cast<std::size_t>(j)] = pq[static_cast<std::size_t>(j)].lc();
            }
            PolyQ zpoly("z", zc);
            if (zpoly.degree() < 1) continue;

            for (const Value& z : z_candidates(zpoly, quad_ext)) {
                // auxiliary recurrence for the polynomial part c(N)
                std::vector<PolyV> aux(static_cast<std::size_t>(m) + 1);
                for (long j = 0; j <= m; ++j) {
                    PolyV q = to_value_poly(pq[static_cast<std::size_t>(j)]).scaled(z.pow(j));
                    for (long t = 0; t < j; ++t) q *= to_value_poly(a.shifted(t));
                    for (long t = j; t < m; ++t) q *= to_value_poly(b.shifted(t));
                    aux[static_cast<std::size_t>(j)] = q;
                }
                for (const auto& c : poly_solutions(aux)) {
                    RatFunV r = RatFunV(to_value_poly(a), to_value_poly(b)) * RatFunV(PolyV(z)) *
                                RatFunV(c.shifted(1), c);
                    push_ratio(r);
                }
            }
        }
    }
    std::sort(ratios.begin(), ratios.end(),
              [](const RatFunV& a, const RatFunV& b) { return a.cmp(b) < 0; });
    return ratios;
}

namespace {

// right-divide L by (sigma - r): L = Q (sigma - r) + rem
std::pair<std::vector<RatFunV>, RatFunV> right_divide(const std::vector<RatFunV>& l,
                                                      const RatFunV& r) {
    const long m = static_cast<long>(l.size()) - 1;
    std::vector<RatFunV> q(static_cast<std::size_t>(m), RatFunV(Value(0)));
    q[static_cast<std::size_t>(m - 1)] = l[static_cast<std::size_t>(m)];
    for (long j = m - 1; j >= 1; --j)
        q[static_cast<std::size_t>(j - 1)] =
            l[static_cast<std::size_t>(j)] + q[static_cast<std::size_t>(j)] * r.shifted(j);
    RatFunV rem = l[0] + q[0] * r.shifted(0);
    return {q, rem};
}

// variation of constants for y(N+1) = r(N) y(N) + u(N)
SumExpr first_order_particular(const RatFunV& r, const SumExpr& u, long& valid_from) {
    if (u.is_zero()) {
        valid_from = 0;
        return SumExpr::zero();
    }
    RatFunV rt = r.shifted(-1);  // h(N) = prod_{k=l}^{N} r(k-1)
    long l = 1;
    for (long rt_root : integer_roots(rt.num())) l = std::max(l, rt_root + 1);
    for (long rt_pole : integer_roots(rt.den())) l = std::max(l, rt_pole + 1);
    l = std::max(l, u.offset() + 1);
    HypProduct h(l, rt);
    HypProduct hinv(l, rt.inverse());
    SumExpr summand = synchronize_shift(u, -1) * SumExpr::product(hinv);
    SumExpr tail = SumExpr::nested(NestedSum{l, std::make_shared<const SumExpr>(summand)});
    valid_from = l - 1;
    return SumExpr::product(h) * tail;
}

SumExpr first_order_homogeneous(const RatFunV& r, long& valid_from) {
    RatFunV rt = r.shifted(-1);
    long l = 1;
    for (long rt_root : integer_roots(rt.num())) l = std::max(l, rt_root + 1);
    for (long rt_pole : integer_roots(rt.den())) l = std::max(l, rt_pole + 1);
    valid_from = std::max(valid_from, l - 1);
    return SumExpr::product(HypProduct(l, rt));
}

SumExpr postprocess(const SumExpr& e) { return reduce_products(recognize_harmonics(e)); }

RecSolveResult dalembert_impl(const std::vector<RatFunV>& l, const SumExpr& rhs,
                              const RecSolveOptions& opts) {
    RecSolveResult res;
    const long m = static_cast<long>(l.size()) - 1;
    if (m == 0) {
        if (!rhs.is_zero()) res.particular = rhs.scaled(l[0].inverse());
        return res;
    }
    // clear denominators for the ratio search
    PolyV den{Value(1)};
    for (const auto& c : l) den = poly_lcm(den, c.den());
    std::vector<PolyV> cleared;
    for (const auto& c : l) cleared.push_back((c * RatFunV(den)).num());
    std::vector<RatFunV> ratios = hyper_solutions(cleared, opts.quad_ext);
    if (ratios.empty()) {
        res.unsolved_order = m;
        res.residual_op = l;
        if (!rhs.is_zero()) res.particular.reset();
        return res;
    }
    const RatFunV r = ratios.front();
    auto [q, rem] = right_divide(l, r);
    if (!rem.is_zero()) throw Error("dalembert_solve: spurious hypergeometric ratio");

    RecSolveResult sub = dalembert_impl(q, rhs, opts);
    res.certificates.push_back(r);
    res.certificates.insert(res.certificates.end(), sub.certificates.begin(),
                            sub.certificates.end());
    res.unsolved_order = sub.unsolved_order;
    res.residual_op = sub.residual_op;
    res.valid_from = sub.valid_from;

    long vf = 0;
    res.homogeneous.push_back(first_order_homogeneous(r, vf));
    res.valid_from = std::max(res.valid_from, vf);
    for (const auto& u : sub.homogeneous) {
        SumExpr lifted = first_order_particular(r, u, vf);
        res.homogeneous.push_back(lifted);
        res.valid_from = std::max(res.valid_from, vf);
    }
    if (sub.particular) {
        SumExpr yp = first_order_particular(r, *sub.particular, vf);
        res.particular = yp;
        res.valid_from = std::max(res.valid_from, vf);
    } else if (!rhs.is_zero() && sub.unsolved_order > 0) {
        res.particular.reset();
    }
    return res;
}

}  // namespace

RecSolveResult dalembert_solve(const std::vector<PolyV>& coeffs_in, const SumExpr& rhs,
                               const RecSolveOptions& opts) {
    std::vector<PolyV> coeffs = trim_op(coeffs_in);
    if (coeffs.empty()) throw Error("dalembert_solve: zero operator");
    std::vector<RatFunV> l;
    for (const auto& c : coeffs) l.emplace_back(c);
    RecSolveResult res = dalembert_impl(l, rhs.normalized(), opts);
    for (auto& h : res.homogeneous) h = postprocess(h);
    if (res.particular) *res.particular = postprocess(*res.particular);
    for (const auto& h : res.homogeneous) res.valid_from = std::max(res.valid_from, h.offset());
    if (res.particular) res.valid_from = std::max(res.valid_from, res.particular->offset());
    return res;
}

MatchedSolution match_initial_values(const std::vector<PolyV>& coeffs_in,
                                     const std::function<Value(long)>& rhs_at,
                                     const RecSolveResult& sol,
                                     const std::map<long, Value>& supplied, long valid_from,
                                     const RecSolveOptions& opts) {
    std::vector<PolyV> coeffs = trim_op(coeffs_in);
    const long m = static_cast<long>(coeffs.size()) - 1;
    const std::size_t nb = sol.homogeneous.size();
    MatchedSolution out;

    long anchor = std::max(valid_from, sol.valid_from);
    // propagate supplied values upward where the recurrence determines them
    auto lead_at = [&](long n) { return coeffs[static_cast<std::size_t>(m)].eval(Value(n)); };
    std::map<long, Value> value;
    std::map<long, bool> used_supplied;
    long top = anchor + m + static_cast<long>(nb) + 24 + opts.check_points;
    for (long k = 0; k <= top; ++k) {
        auto it = supplied.find(k);
        long base = k - m;
        bool computable = m > 0 && base >= valid_from && base >= 0 && !lead_at(base).is_zero();
        if (computable)
            for (long j = 0; j < m; ++j)
                if (!value.count(base + j)) computable = false;
        if (computable) {
            Value acc = rhs_at(base);
            for (long j = 0; j < m; ++j)
                acc -= coeffs[static_cast<std::size_t>(j)].eval(Value(base + j)) * value[base + j];
            value[k] = acc / lead_at(base);
            continue;  // determined; a supplied duplicate is not consumed
        }
        if (it != supplied.end()) {
            value[k] = it->second;
            used_supplied[k] = true;
            // values demanded beyond the plain 0..m-1 window are "extra":
            // they patch singular leading-coefficient points
            if (k >= m) out.extra.push_back(k);
        }
    }
    for (const auto& [k, flag] : used_supplied)
        if (flag) out.used.push_back(k);

    // an anchor window where the basis matrix is nonsingular and all target
    // values exist
    std::optional<long> first_gap;
    for (long shift = 0; shift < 20; ++shift) {
        long a0 = anchor + shift;
        Matrix<Value> mtx(nb, nb);
        std::vector<Value> target(nb, Value(0));
        bool pole = false, gap = false;
        try {
            for (std::size_t i = 0; i < nb; ++i) {
                long pt = a0 + static_cast<long>(i);
                for (std::size_t jj = 0; jj < nb; ++jj)
                    mtx.at(i, jj) = sol.homogeneous[jj].eval(pt);
                if (!value.count(pt)) {
                    gap = true;
                    if (!first_gap) first_gap = pt;
                    break;
                }
                Value t = value.at(pt);
                if (sol.particular) t -= sol.particular->eval(pt);
                target[i] = t;
            }
        } catch (const EvalPole&) {
            pole = true;
        }
        if (pole || gap) continue;
        if (nb > 0 && rank_of(mtx) != nb) continue;
        auto lam = nb > 0 ? solve_linear(mtx, target)
                          : std::optional<std::vector<Value>>(std::vector<Value>{});
        if (!lam) continue;
        SumExpr expr = sol.particular ? *sol.particular : SumExpr::zero();
        for (std::size_t i = 0; i < nb; ++i) expr += sol.homogeneous[i].scaled((*lam)[i]);
        expr = expr.normalized();
        // verify beyond the anchors
        bool ok = true;
        for (long k = a0; k <= std::min(top, a0 + static_cast<long>(nb) + opts.check_points) && ok;
             ++k) {
            if (!value.count(k)) break;
            try {
                if (expr.eval(k) != value.at(k)) ok = false;
            } catch (const EvalPole&) {
                ok = false;
            }
        }
        if (!ok)
            throw OutsideClass("solution determined by the initial values escapes the "
                               "d'Alembertian span found",
                               sol.unsolved_order > 0 ? sol.unsolved_order : 0);
        out.solution = expr;
        return out;
    }
    if (first_gap)
        throw InsufficientInitialValues(
            "recurrence needs a value at N = " + std::to_string(*first_gap), {*first_gap});
    throw Error("match_initial_values: no nonsingular anchor window found");
}

// ---- epsilon layer ----------------------------------------------------------

int EpsRec::eps_depth() const {
    int d = 0;
    for (const auto& cj : coeffs) d = std::max(d, static_cast<int>(cj.size()));
    return d;
}

int EpsRec::normalize_eps_power() {
    int v = -1;
    for (const auto& cj : coeffs)
        for (std::size_t t = 0; t < cj.size(); ++t)
            if (!cj[t].is_zero()) {
                v = v < 0 ? static_cast<int>(t) : std::min(v, static_cast<int>(t));
            }
    if (v <= 0) return 0;
    for (auto& cj : coeffs) cj.erase(cj.begin(), cj.begin() + std::min<std::size_t>(v, cj.size()));
    return v;
}

EpsRecConversion to_eps_rec(const OreOp& op, long valid_from) {
    if (op.kind != OreKind::Shift) throw Error("to_eps_rec: expected a recurrence operator");
    // clear the N-denominators over Q(ep)
    Poly<EpsRat> dn{EpsRat(1)};
    for (const auto& c : op.coeffs) dn = poly_lcm(dn, c.den());
    std::vector<Poly<EpsRat>> cleared;
    for (const auto& c : op.coeffs) cleared.push_back((c * SysRat(dn)).num());
    // clear the ep-denominators of the cleared coefficients
    PolyQ de{Rational(1)};
    for (const auto& p : cleared)
        for (const auto& e : p.coeffs()) de = poly_lcm(de, e.den());

    EpsRecConversion out;
    out.multiplier = SysRat(dn) * SysRat(Poly<EpsRat>(EpsRat(de)));
    out.rec.valid_from = valid_from;
    for (auto& p : cleared) {
        std::vector<PolyQ> table;  // per-eps-order polynomial in N
        for (long i = 0; i <= p.degree(); ++i) {
            EpsRat e = p.coeff(static_cast<std::size_t>(i)) * EpsRat(de);
            if (!e.is_polynomial())
                throw Error("to_eps_rec: ep-denominator survived clearing");
            const PolyQ& en = e.num();
            for (long t = 0; t <= en.degree(); ++t) {
                Rational c = en.coeff(static_cast<std::size_t>(t));
                if (c.is_zero()) continue;
                if (static_cast<long>(table.size()) <= t)
                    table.resize(static_cast<std::size_t>(t) + 1);
                table[static_cast<std::size_t>(t)] +=
                    PolyQ::monomial("N", c, static_cast<std::size_t>(i));
            }
        }
        out.rec.coeffs.push_back(std::move(table));
    }
    return out;
}

EpsSolution eps_solve(const EpsRec& rec_in, const EpsLaurent& rhs,
                      const std::map<long, EpsValues>& initial_values, int win_lo, int win_hi,
                      const RecSolveOptions& opts) {
    if (win_hi < win_lo) throw EmptyWindow("eps_solve: empty solution window");
    EpsRec rec = rec_in;
    int v = rec.normalize_eps_power();
    // dividing the equation by ep^v shifts every rhs order down by v
    const long m = rec.order();
    if (m < 0) throw Error("eps_solve: zero operator");

    auto coeff_at = [&](long j, int t) -> PolyQ {
        const auto& cj = rec.coeffs[static_cast<std::size_t>(j)];
        if (t < 0 || t >= static_cast<int>(cj.size())) return PolyQ();
        return cj[static_cast<std::size_t>(t)];
    };
    if (coeff_at(m, 0).is_zero())
        throw Error("eps_solve: leading coefficient vanishes at ep = 0 after normalization");
    if (coeff_at(0, 0).is_zero())
        throw Error("eps_solve: trailing coefficient vanishes at ep = 0 after normalization");

    // solutions are assumed to start at win_lo: anything known below must
    // vanish, otherwise the order-by-order scheme would miss lower orders
    for (int t = rhs.low; t < win_lo + v; ++t)
        if (rhs.covers(t) && !rhs.at(t).normalized().is_zero())
            throw EmptyWindow("eps_solve: rhs carries orders below the solution window");
    for (const auto& [k, ev] : initial_values) {
        (void)k;
        for (int t = ev.low; t < win_lo; ++t)
            if (ev.covers(t) && !ev.at(t).is_zero())
                throw EmptyWindow("eps_solve: initial values carry orders below the window");
    }

    std::vector<PolyV> l0;
    for (long j = 0; j <= m; ++j) l0.push_back(to_value_poly(coeff_at(j, 0)));

    RecSolveResult base = dalembert_solve(l0, SumExpr::zero(), opts);
    if (base.unsolved_order > 0)
        throw OutsideClass("eps_solve: the ep^0 operator does not factor into first-order "
                           "pieces over the search field",
                           base.unsolved_order);

    EpsSolution out;
    out.low = win_lo;
    std::vector<SumExpr> solved;
    for (int t = win_lo; t <= win_hi; ++t) {
        // rhs at this order: rhs shifted by the normalization, minus
        // higher ep-parts of the operator acting on lower solution orders
        SumExpr target = rhs.at(t + v);
        for (int u = 1; u < rec.eps_depth(); ++u) {
            int idx = t - u - win_lo;
            if (idx < 0) break;
            const SumExpr& lower = solved[static_cast<std::size_t>(idx)];
            if (lower.is_zero()) continue;
            for (long j = 0; j <= m; ++j) {
                PolyQ c = coeff_at(j, u);
                if (c.is_zero()) continue;
                target -= synchronize_shift(lower, j).scaled(RatFunV(to_value_poly(c)));
            }
        }
        target = target.normalized();

        RecSolveResult lvl = base;
        if (!target.is_zero()) {
            RecSolveResult full = dalembert_solve(l0, target, opts);
            if (full.unsolved_order > 0)
                throw OutsideClass("eps_solve: no particular solution in the class at ep order " +
                                       std::to_string(t),
                                   full.unsolved_order);
            lvl = full;
        }
        std::map<long, Value> vals;
        for (const auto& [k, ev] : initial_values)
            if (ev.covers(t)) vals[k] = ev.at(t);
        auto rhs_at = [&](long n) { return target.is_zero() ? Value(0) : target.eval(n); };
        MatchedSolution ms =
            match_initial_values(l0, rhs_at, lvl, vals, rec.valid_from, opts);
        for (long k : ms.used)
            if (std::find(out.ivs_consumed.begin(), out.ivs_consumed.end(), k) ==
                out.ivs_consumed.end())
                out.ivs_consumed.push_back(k);
        for (long k : ms.extra)
            if (std::find(out.extra_requested.begin(), out.extra_requested.end(), k) ==
                out.extra_requested.end())
                out.extra_requested.push_back(k);
        solved.push_back(ms.solution);
    }
    out.orders = std::move(solved);
    std::sort(out.ivs_consumed.begin(), out.ivs_consumed.end());
    std::sort(out.extra_requested.begin(), out.extra_requested.end());
    return out;
}

}  // namespace oresolve
