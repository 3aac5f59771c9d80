#include "oresolve/factor.hpp"

#include <algorithm>
#include <map>

#include "oresolve/errors.hpp"
#include "oresolve/parse.hpp"

namespace oresolve {

namespace {

// Scale to integer coefficients with content 1, ignoring sign of lc.
std::vector<mpz_class> primitive_integer_coeffs(const PolyQ& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> zs;
    zs.reserve(p.coeffs().size());
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class z = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        zs.push_back(z);
    }
    if (g != 0)
        for (auto& z : zs) z /= g;
    return zs;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) return {};
    if (!n.fits_ulong_p())
        throw Error("factor_over_q: constant term too large for divisor enumeration");
    unsigned long m = n.get_ui();
    std::vector<mpz_class> divs;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.emplace_back(d);
            if (d != m / d) divs.emplace_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Trial division by low-degree integer polynomials: find a monic-in-Q factor
// of the given degree, or nothing.  Complete for integer polynomials whose
// leading/trailing coefficients have enumerable divisors (Gauss lemma).
std::optional<PolyQ> find_low_degree_factor(const PolyQ& p, std::size_t deg) {
    if (static_cast<long>(deg) >= p.degree() || deg < 2) return std::nullopt;
    auto zs = primitive_integer_coeffs(p);
    if (zs.front() == 0) return std::nullopt;  // x | p handled elsewhere
    auto lead_divs = divisors_of(zs.back());
    auto const_divs = divisors_of(zs.front());

    // Coefficient bound for divisors of an integer polynomial (Mignotte-style,
    // crude): |b_i| <= 2^deg * max|a_i| * (|lead divisor|).
    mpz_class maxc = 0;
    for (const auto& z : zs)
        if (abs(z) > maxc) maxc = abs(z);
    mpz_class bound = maxc * (mpz_class(1) << static_cast<unsigned>(deg + 1));
    // Keep the odometer search tractable; residuals that escape the bound
    // stay unsplit, which callers treat as irreducible.
    long cap = deg == 2 ? 60 : 12;
    long b = (!bound.fits_slong_p() || bound > cap) ? cap : bound.get_si();

    std::string var = p.var();
    for (const auto& a : lead_divs) {
        for (const auto& c0 : const_divs) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                // candidate a*x^deg + (middle) + sgn*c0, middle coefficients searched
                std::vector<Rational> cand(deg + 1, Rational(0));
                cand[deg] = Rational(mpq_class(a));
                cand[0] = Rational(mpq_class(sgn * c0));
                // enumerate middle coefficients by odometer
                std::vector<long> mid(deg - 1, -b);
                while (true) {
                    for (std::size_t i = 0; i + 1 < deg; ++i) cand[i + 1] = Rational(mid[i]);
                    PolyQ candidate(var, cand);
                    if (candidate.divides(p)) return candidate.monic();
                    std::size_t i = 0;
                    for (; i + 1 < deg; ++i) {
                        if (mid[i] < b) {
                            ++mid[i];
                            break;
                        }
                        mid[i] = -b;
                    }
                    if (i + 1 >= deg) break;
                }
            }
        }
    }
    return std::nullopt;
}

void factor_squarefree_part(const PolyQ& part, std::size_t mult, Factorization& out) {
    PolyQ rest = part.monic();
    // strip rational roots
    for (auto& [root, m] : rational_roots(rest)) {
        PolyQ lin(rest.var(), {-root, Rational(1)});
        for (std::size_t i = 0; i < m; ++i) rest = rest.exact_div(lin);
        out.factors.push_back({lin, mult * m});
    }
    if (rest.degree() <= 0) return;
    if (rest.degree() <= 2) {
        out.factors.push_back({rest, mult});
        return;
    }
    if (rest.degree() > 8) {
        out.factors.push_back({rest, mult});  // kept unsplit
        return;
    }
    for (std::size_t deg = 2; static_cast<long>(deg) <= rest.degree() / 2; ++deg) {
        while (static_cast<long>(deg) <= rest.degree() / 2) {
            auto f = find_low_degree_factor(rest, deg);
            if (!f) break;
            out.factors.push_back({*f, mult});
            rest = rest.exact_div(*f).monic();
        }
    }
    if (rest.degree() >= 1) out.factors.push_back({rest, mult});
}

}  // namespace

PolyQ Factorization::recombine(const std::string& var) const {
    PolyQ acc(constant);
    if (zero_root_multiplicity > 0)
        acc *= PolyQ::monomial(var, Rational(1), zero_root_multiplicity);
    for (const auto& f : factors) acc *= f.poly.pow(f.multiplicity);
    return acc;
}

std::vector<PolyQ> squarefree_decomposition(const PolyQ& p) {
    // Yun's algorithm over a field of characteristic 0.
    std::vector<PolyQ> out;
    PolyQ f = p.monic();
    if (f.degree() <= 0) return out;
    PolyQ a = poly_gcd(f, f.derivative());
    PolyQ b = f.exact_div(a);
    PolyQ c = f.derivative().exact_div(a);
    PolyQ d = c - b.derivative();
    while (b.degree() > 0) {
        PolyQ g = poly_gcd(b, d);
        out.push_back(g.monic());
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
    }
    return out;
}

std::vector<std::pair<Rational, std::size_t>> rational_roots(const PolyQ& p) {
    std::vector<std::pair<Rational, std::size_t>> out;
    if (p.degree() <= 0) return out;
    PolyQ rest = p;
    // strip x^k
    while (!rest.is_zero() && rest.coeff(0).is_zero()) {
        rest = rest.exact_div(PolyQ::variable(p.var()));
        if (out.empty() || !out.back().first.is_zero())
            out.emplace_back(Rational(0), 1);
        else
            ++out.back().second;
    }
    if (rest.degree() <= 0) return out;
    auto zs = primitive_integer_coeffs(rest);
    auto nums = divisors_of(zs.front());
    auto dens = divisors_of(zs.back());
    for (const auto& n : nums) {
        for (const auto& d : dens) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                Rational cand{mpq_class(sgn * n, d)};
                std::size_t mult = 0;
                while (rest.degree() >= 1 && rest.eval(cand).is_zero()) {
                    rest = rest.exact_div(PolyQ(p.var(), {-cand, Rational(1)}));
                    ++mult;
                }
                if (mult > 0) out.emplace_back(cand, mult);
            }
        }
    }
    return out;
}

std::vector<long> integer_roots(const PolyQ& p) {
    std::vector<long> out;
    for (const auto& [r, m] : rational_roots(p))
        if (r.is_integer()) out.push_back(r.to_long());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> integer_roots(const PolyV& p) {
    // n is a root of re + su*sqrt(d) iff it is a common root of both parts
    std::vector<Rational> re, su;
    for (const auto& c : p.coeffs()) {
        re.push_back(c.rational_part());
        su.push_back(c.surd_part());
    }
    PolyQ pre(p.var(), re), psu(p.var(), su);
    if (pre.is_zero()) return integer_roots(psu);
    if (psu.is_zero()) return integer_roots(pre);
    return integer_roots(poly_gcd(pre, psu));
}

std::vector<Value> exact_roots(const PolyQ& factor) {
    if (factor.degree() == 1) {
        // monic x + c -> root -c
        Rational c = factor.coeff(0) / factor.coeff(1);
        return {Value(-c)};
    }
    if (factor.degree() == 2) {
        Rational b = factor.coeff(1) / factor.coeff(2);
        Rational c = factor.coeff(0) / factor.coeff(2);
        Rational disc = b * b - Rational(4) * c;
        // disc = s^2 * d with d square-free; sqrt(disc) = s*sqrt(d)
        if (disc.sign() < 0) throw Error("exact_roots: complex roots are outside the value domain");
        // write disc = (p/q)  ->  sqrt = sqrt(p*q)/q
        mpz_class pq = disc.num() * disc.den();
        if (!pq.fits_slong_p()) throw Error("exact_roots: discriminant too large");
        Value s = Value::sqrt_of(pq.get_si()) / Value(Rational(mpq_class(disc.den())));
        Value mb = Value(-b);
        return {(mb + s) / Value(2), (mb - s) / Value(2)};
    }
    throw IrreducibleDegreeTooHigh("exact roots demanded for irreducible factor of degree " +
                                   std::to_string(factor.degree()) + ": " + poly_str(factor));
}

Factorization factor_over_q(const PolyQ& p) {
    if (p.is_zero()) throw Error("factor_over_q: zero polynomial");
    Factorization out;
    out.constant = Rational(1);
    PolyQ rest = p;
    std::string var = p.var().empty() ? "x" : p.var();
    while (!rest.is_zero() && rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        rest = rest.exact_div(PolyQ::variable(var));
        ++out.zero_root_multiplicity;
    }
    out.constant = rest.is_zero() ? Rational(0) : rest.lc();
    if (rest.degree() <= 0) return out;
    rest = rest.monic();

    auto sf = squarefree_decomposition(rest);
    for (std::size_t i = 0; i < sf.size(); ++i) {
        if (sf[i].degree() <= 0) continue;
        factor_squarefree_part(sf[i], i + 1, out);
    }
    // deterministic ordering: by degree, then coefficient order
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.cmp(b.poly) < 0;
    });
    // merge equal factors (defensive; multiplicities from Yun are disjoint)
    std::vector<Factorization::Entry> merged;
    for (auto& e : out.factors) {
        if (!merged.empty() && merged.back().poly == e.poly)
            merged.back().multiplicity += e.multiplicity;
        else
            merged.push_back(e);
    }
    out.factors = std::move(merged);
    return out;
}

}  // namespace oresolve
