#include <doctest.h>

#include <random>

#include "oresolve/errors.hpp"
#include "oresolve/rational.hpp"
#include "oresolve/value.hpp"

using namespace oresolve;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(2, 3) + Rational(1, 6)).str() == "5/6");
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK(Rational(3, 7).inverse() == Rational(7, 3));
    CHECK(Rational(-2).pow(10) == Rational(1024));
    CHECK(Rational(1, 2).pow(-3) == Rational(8));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational parse and print round-trip") {
    for (const char* s : {"0", "1", "-7", "22/7", "-3/8"}) {
        Rational r = Rational::from_string(s);
        CHECK(r.str() == s);
    }
}

TEST_CASE("exactness: (a+b)-b == a on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000), e(1, 999);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), e(rng)), b(d(rng), e(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("quadratic extension arithmetic") {
    Value s5 = Value::sqrt_of(5);
    CHECK(s5 * s5 == Value(5));
    CHECK(Value::sqrt_of(12).str() == "(0+2*Sqrt[3])");
    CHECK(Value::sqrt_of(9) == Value(3));

    // golden ratio: Phi = (1+sqrt5)/2 satisfies x^2 = x + 1
    Value phi = (Value(1) + s5) / Value(2);
    CHECK(phi * phi == phi + Value(1));
    CHECK(phi.inverse() == phi - Value(1));
    CHECK(phi.pow(2) - phi - Value(1) == Value(0));

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-50, 50), e(1, 20);
    for (int i = 0; i < 100; ++i) {
        Value a(Rational(d(rng), e(rng)), Rational(d(rng), e(rng)), 5);
        Value b(Rational(d(rng), e(rng)), Rational(d(rng), e(rng)), 5);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("mixing two extensions is rejected") {
    Value a = Value::sqrt_of(5), b = Value::sqrt_of(3);
    CHECK_THROWS_AS(a + b, MixedExtension);
    CHECK_THROWS_AS(a * b, MixedExtension);
    // but rationals embed into any extension
    CHECK(a + Value(1) - Value(1) == a);
}

TEST_CASE("value printing round-trips through the common-denominator form") {
    Value phi = (Value(1) + Value::sqrt_of(5)) / Value(2);
    CHECK(phi.str() == "(1+1*Sqrt[5])/2");
    Value m = -phi;
    CHECK(m.str() == "(-1-1*Sqrt[5])/2");
}
