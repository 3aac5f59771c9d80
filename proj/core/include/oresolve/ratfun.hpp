#pragma once

#include <string>
#include <utility>

#include "oresolve/poly.hpp"

namespace oresolve {

// Univariate rational function over a field K, kept canonical:
// gcd(num, den) = 1 and den monic.  Canonical form makes operator== a
// structural identity test.
template <class K>
class RatFun {
  public:
    RatFun() : num_(), den_(K(1)) {}
    RatFun(K c) : num_(std::move(c)), den_(K(1)) {}      // NOLINT
    RatFun(long c) : num_(K(c)), den_(K(1)) {}           // NOLINT
    RatFun(Poly<K> p) : num_(std::move(p)), den_(K(1)) {}  // NOLINT
    RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun variable(std::string var) { return RatFun(Poly<K>::variable(std::move(var))); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    const std::string& var() const { return num_.var().empty() ? den_.var() : num_.var(); }

    K constant_value() const {
        if (!is_constant()) throw Error("RatFun: not constant");
        return num_.constant_term();
    }

    RatFun operator-() const { return RatFun(-num_, den_, no_normalize_tag{}); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw Error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const {
        if (is_zero()) throw Error("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw EvalPole("RatFun: pole at evaluation point");
        return num_.eval(x) / d;
    }

    bool has_pole_at(const K& x) const { return den_.eval(x).is_zero(); }

    RatFun shifted(long j) const { return RatFun(num_.shifted(j), den_.shifted(j), no_normalize_tag{}); }

    RatFun compose(const Poly<K>& inner) const { return RatFun(num_.compose(inner), den_.compose(inner)); }

    RatFun pow(long e) const {
        RatFun base = e < 0 ? inverse() : *this;
        long n = e < 0 ? -e : e;
        RatFun acc(K(1));
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    int cmp(const RatFun& o) const {
        int c = num_.cmp(o.num_);
        if (c != 0) return c;
        return den_.cmp(o.den_);
    }

    std::size_t bit_size() const { return num_.bit_size() + den_.bit_size(); }

  private:
    struct no_normalize_tag {};
    RatFun(Poly<K> num, Poly<K> den, no_normalize_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw Error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        K lc = den_.lc();
        if (!lc.is_one()) {
            K inv = K(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly<K> num_, den_;
};

template <class K>
int scalar_cmp(const RatFun<K>& a, const RatFun<K>& b) {
    return a.cmp(b);
}

using RatFunQ = RatFun<Rational>;
using RatFunV = RatFun<Value>;

// The coefficient field Q(ep) carrying the dimensional parameter.
using EpsRat = RatFun<Rational>;

inline RatFunV to_value_ratfun(const RatFunQ& r) {
    return RatFunV(to_value_poly(r.num()), to_value_poly(r.den()));
}

}  // namespace oresolve
