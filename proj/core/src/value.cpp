#include "oresolve/value.hpp"

#include <ostream>
#include <sstream>

#include "oresolve/errors.hpp"

namespace oresolve {

Value::Value(Rational re, Rational su, long d) : re_(std::move(re)), su_(std::move(su)), d_(d) {
    if (su_.is_zero()) {
        d_ = 0;
    } else if (d_ <= 1) {
        throw Error("Value: radicand must be a square-free integer > 1");
    }
}

Value Value::sqrt_of(long n) {
    if (n < 0) throw Error("Value: negative radicand");
    long outside = 1, inside = n;
    for (long p = 2; p * p <= inside; ++p) {
        while (inside % (p * p) == 0) {
            inside /= p * p;
            outside *= p;
        }
    }
    if (inside <= 1) return Value(Rational(outside * inside));
    return Value(Rational(0), Rational(outside), inside);
}

const Rational& Value::to_rational() const {
    if (!is_rational()) throw Error("Value: " + str() + " is not rational");
    return re_;
}

namespace {
long join_radicand(const Value& a, const Value& b) {
    if (a.radicand() == 0) return b.radicand();
    if (b.radicand() == 0 || a.radicand() == b.radicand()) return a.radicand();
    throw MixedExtension("cannot mix sqrt(" + std::to_string(a.radicand()) + ") and sqrt(" +
                         std::to_string(b.radicand()) + ")");
}
}  // namespace

Value& Value::operator+=(const Value& o) {
    long d = join_radicand(*this, o);
    re_ += o.re_;
    su_ += o.su_;
    d_ = su_.is_zero() ? 0 : d;
    return *this;
}

Value& Value::operator-=(const Value& o) {
    long d = join_radicand(*this, o);
    re_ -= o.re_;
    su_ -= o.su_;
    d_ = su_.is_zero() ? 0 : d;
    return *this;
}

Value& Value::operator*=(const Value& o) {
    long d = join_radicand(*this, o);
    Rational re = re_ * o.re_ + Rational(d) * su_ * o.su_;
    Rational su = re_ * o.su_ + su_ * o.re_;
    re_ = re;
    su_ = su;
    d_ = su_.is_zero() ? 0 : d;
    return *this;
}

Value Value::inverse() const {
    if (is_zero()) throw Error("Value: inverse of zero");
    if (is_rational()) return Value(re_.inverse());
    Rational n = norm();
    return Value(re_ / n, -su_ / n, d_);
}

Value& Value::operator/=(const Value& o) {
    return *this *= o.inverse();
}

Value Value::pow(long e) const {
    Value base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Value acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

int Value::cmp(const Value& o) const {
    if (d_ != o.d_) return d_ < o.d_ ? -1 : 1;
    if (re_ != o.re_) return re_ < o.re_ ? -1 : 1;
    if (su_ != o.su_) return su_ < o.su_ ? -1 : 1;
    return 0;
}

std::string Value::str() const {
    if (is_rational()) return re_.str();
    // Common-denominator form (p+q*Sqrt[d])/c.
    mpz_class c;
    mpz_lcm(c.get_mpz_t(), re_.den().get_mpz_t(), su_.den().get_mpz_t());
    Rational cr{mpq_class(c)};
    Rational p = re_ * cr, q = su_ * cr;
    std::ostringstream os;
    os << "(" << p.str();
    if (q.sign() >= 0) os << "+";
    os << q.str() << "*Sqrt[" << d_ << "])";
    if (c != 1) os << "/" << c.get_str();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << v.str();
}

}  // namespace oresolve
