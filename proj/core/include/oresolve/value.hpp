#pragma once

#include <iosfwd>
#include <string>

#include "oresolve/rational.hpp"

namespace oresolve {

// Scalar from Q or a single quadratic extension Q(sqrt(d)): re + su*sqrt(d)
// with d a square-free integer > 1.  d is 0 whenever su is 0, so plain
// rationals compare equal regardless of how they were produced.  Arithmetic
// mixing two different radicands throws MixedExtension.
class Value {
  public:
    Value() : d_(0) {}
    Value(long n) : re_(n), d_(0) {}  // NOLINT: implicit embedding of integers
    Value(const Rational& r) : re_(r), d_(0) {}  // NOLINT: implicit embedding
    Value(Rational re, Rational su, long d);

    // sqrt(n) for integer n >= 0, with the square part extracted:
    // sqrt(12) = 2*sqrt(3), sqrt(9) = 3.
    static Value sqrt_of(long n);

    const Rational& rational_part() const { return re_; }
    const Rational& surd_part() const { return su_; }
    long radicand() const { return d_; }

    bool is_zero() const { return re_.is_zero() && su_.is_zero(); }
    bool is_one() const { return su_.is_zero() && re_.is_one(); }
    bool is_rational() const { return su_.is_zero(); }

    // The rational value; throws if a surd part is present.
    const Rational& to_rational() const;

    Value conjugate() const { return Value(re_, -su_, d_); }
    // Field norm re^2 - d*su^2; rational, zero iff the value is zero.
    Rational norm() const { return re_ * re_ - Rational(d_) * su_ * su_; }

    Value operator-() const { return Value(-re_, -su_, d_); }
    Value& operator+=(const Value& o);
    Value& operator-=(const Value& o);
    Value& operator*=(const Value& o);
    Value& operator/=(const Value& o);

    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(Value a, const Value& b) { return a *= b; }
    friend Value operator/(Value a, const Value& b) { return a /= b; }

    friend bool operator==(const Value& a, const Value& b) {
        return a.re_ == b.re_ && a.su_ == b.su_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    Value inverse() const;
    Value pow(long e) const;

    std::size_t bit_size() const { return re_.bit_size() + su_.bit_size(); }

    // Deterministic total order (radicand, rational part, surd part);
    // used for canonical term ordering, not a numeric comparison.
    int cmp(const Value& o) const;

    std::string str() const;

  private:
    Rational re_, su_;
    long d_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace oresolve
