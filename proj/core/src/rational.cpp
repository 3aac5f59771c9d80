#include "oresolve/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "oresolve/errors.hpp"

namespace oresolve {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational literal: '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("Rational: " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw Error("Rational: " + str() + " does not fit a long");
    return v_.get_num().get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("Rational: 0 to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
    return Rational(mpq_class(num, den));
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    // gcd of rationals: gcd of numerators over lcm of denominators; reduces
    // to integer gcd for integer inputs.
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    if (l == 0) return Rational(0);
    return Rational(mpq_class(g, l));
}

}  // namespace oresolve
