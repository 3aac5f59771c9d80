#include "oresolve/harmonic.hpp"

#include "oresolve/errors.hpp"

namespace oresolve {

namespace {

RatFunV inv_power_of_index(long w, long shift) {
    // 1 / (N + shift)^w
    PolyV lin("N", {Value(shift), Value(1)});
    return RatFunV(PolyV(Value(1)), lin.pow(static_cast<std::size_t>(w)));
}

// prepend slot (w, x) to every harmonic term of a linear combination
SumExpr prepend_slot(const SumExpr& comb, long w, const Value& x) {
    std::vector<Term> out;
    for (const Term& t : comb.terms()) {
        if (!t.prods.empty() || !t.sums.empty() || !t.root.is_one() || t.harms.size() > 1 ||
            !t.rat.is_constant())
            throw Error("quasi_shuffle: internal combination is not harmonic-linear");
        Term nt;
        nt.rat = t.rat;
        HarmonicSum base = t.harms.empty() ? HarmonicSum() : t.harms[0];
        nt.harms.push_back(base.prepended(w, x));
        out.push_back(std::move(nt));
    }
    return SumExpr::from_terms(std::move(out));
}

}  // namespace

SumExpr harmonic_to_nested(const HarmonicSum& h) {
    if (h.trivial()) return SumExpr::one();
    Term summand;
    summand.rat = inv_power_of_index(h.weights[0], 0);
    summand.root = h.letters[0];
    HarmonicSum t = h.tail();
    if (!t.trivial()) summand.harms.push_back(std::move(t));
    return SumExpr::nested(
        NestedSum{1, std::make_shared<const SumExpr>(SumExpr::from_term(std::move(summand)))});
}

SumExpr quasi_shuffle(const HarmonicSum& a, const HarmonicSum& b) {
    if (a.trivial()) return SumExpr::harmonic(b);
    if (b.trivial()) return SumExpr::harmonic(a);
    long wa = a.weights[0], wb = b.weights[0];
    Value xa = a.letters[0], xb = b.letters[0];
    SumExpr p1 = prepend_slot(quasi_shuffle(a.tail(), b), wa, xa);
    SumExpr p2 = prepend_slot(quasi_shuffle(a, b.tail()), wb, xb);
    SumExpr p3 = prepend_slot(quasi_shuffle(a.tail(), b.tail()), wa + wb, xa * xb);
    return p1 + p2 - p3;
}

SumExpr recognize_harmonics(const SumExpr& e) {
    SumExpr acc = SumExpr::zero();
    const SumExpr norm = e.normalized();
    for (const Term& t : norm.terms()) {
        // peel off the first recognizable nested-sum factor, then recurse
        bool rewritten = false;
        for (std::size_t i = 0; i < t.sums.size() && !rewritten; ++i) {
            const NestedSum& s = t.sums[i];
            if (s.lower < 1) continue;
            SumExpr inner = s.summand->normalized();
            if (inner.terms().size() != 1) continue;
            const Term& u = inner.terms()[0];
            if (!u.prods.empty() || !u.sums.empty() || u.harms.size() > 1) continue;
            if (!u.rat.num().is_constant()) continue;
            // denominator must be exactly k^w, w >= 1
            const PolyV& den = u.rat.den();
            long w = den.degree();
            if (w < 1) continue;
            bool monomial = true;
            for (long d = 0; d < w; ++d)
                if (!den.coeff(static_cast<std::size_t>(d)).is_zero()) monomial = false;
            if (!monomial) continue;
            Value c = u.rat.num().constant_term();
            HarmonicSum tail = u.harms.empty() ? HarmonicSum() : u.harms[0];
            HarmonicSum full = tail.prepended(w, u.root);
            // sum_{k=lower}^{N} = S_full(N) - S_full(lower-1)
            SumExpr repl = SumExpr::harmonic(full);
            if (s.lower > 1) repl -= SumExpr::constant(full.eval(s.lower - 1));
            repl = repl.scaled(c);
            Term rest = t;
            rest.sums.erase(rest.sums.begin() + static_cast<long>(i));
            acc += recognize_harmonics(SumExpr::from_term(rest) * repl);
            rewritten = true;
        }
        if (!rewritten) acc += SumExpr::from_term(t);
    }
    return acc.normalized();
}

SumExpr reduce_products(const SumExpr& e) {
    SumExpr in = recognize_harmonics(e);
    SumExpr acc = SumExpr::zero();
    bool changed = false;
    for (const Term& t : in.terms()) {
        if (t.harms.size() >= 2) {
            SumExpr q = quasi_shuffle(t.harms[0], t.harms[1]);
            Term rest = t;
            rest.harms.erase(rest.harms.begin(), rest.harms.begin() + 2);
            acc += SumExpr::from_term(rest) * q;
            changed = true;
        } else {
            acc += SumExpr::from_term(t);
        }
    }
    return changed ? reduce_products(acc) : acc.normalized();
}

namespace {

// S_h(N+1) in terms of argument N
SumExpr harm_shift_up(const HarmonicSum& h) {
    if (h.trivial()) return SumExpr::one();
    // S_h(N+1) = S_h(N) + x1^(N+1)/(N+1)^w1 * S_tail(N+1)
    Term peel;
    peel.rat = inv_power_of_index(h.weights[0], 1) * RatFunV(h.letters[0]);
    peel.root = h.letters[0];
    return SumExpr::harmonic(h) + SumExpr::from_term(peel) * harm_shift_up(h.tail());
}

SumExpr shift_by_one(const SumExpr& e, int dir);

SumExpr term_shift_by_one(const Term& t, int dir) {
    SumExpr acc = SumExpr::rational(t.rat.shifted(dir));
    if (!t.root.is_one()) {
        Term rp;
        rp.rat = RatFunV(dir > 0 ? t.root : t.root.inverse());
        rp.root = t.root;
        acc *= SumExpr::from_term(rp);
    }
    for (const auto& p : t.prods) {
        Term f;
        f.prods.push_back(p);
        if (dir > 0) {
            f.rat = p.ratio.shifted(1);  // prod(N+1) = prod(N) * h(N+1)
        } else {
            f.rat = p.ratio.inverse();  // prod(N-1) = prod(N) / h(N)
        }
        acc *= SumExpr::from_term(f);
    }
    for (const auto& h : t.harms) {
        if (dir > 0) {
            acc *= harm_shift_up(h);
        } else {
            // S_h(N-1) = S_h(N) - x1^N/N^w1 * S_tail(N)
            Term peel;
            peel.rat = inv_power_of_index(h.weights[0], 0);
            peel.root = h.letters[0];
            HarmonicSum tail = h.tail();
            if (!tail.trivial()) peel.harms.push_back(tail);
            acc *= SumExpr::harmonic(h) - SumExpr::from_term(peel);
        }
    }
    for (const auto& s : t.sums) {
        if (dir > 0) {
            // sum(N+1) = sum(N) + summand(N+1)
            acc *= SumExpr::nested(s) + shift_by_one(*s.summand, +1);
        } else {
            // sum(N-1) = sum(N) - summand(N)
            acc *= SumExpr::nested(s) - *s.summand;
        }
    }
    return acc;
}

SumExpr shift_by_one(const SumExpr& e, int dir) {
    SumExpr acc = SumExpr::zero();
    for (const Term& t : e.terms()) acc += term_shift_by_one(t, dir);
    return acc;
}

}  // namespace

SumExpr synchronize_shift(const SumExpr& e, long j) {
    SumExpr acc = e;
    for (long i = 0; i < (j < 0 ? -j : j); ++i) acc = shift_by_one(acc, j > 0 ? +1 : -1);
    return acc.normalized();
}

}  // namespace oresolve
