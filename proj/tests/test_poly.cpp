#include <doctest.h>

#include <random>

#include "oresolve/parse.hpp"
#include "oresolve/poly.hpp"
#include "oresolve/ratfun.hpp"

using namespace oresolve;

namespace {
PolyQ P(const std::string& s) { return parse_poly_q(s, "x"); }

PolyQ random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<Rational> cs(static_cast<std::size_t>(d(rng)) + 1);
    for (auto& x : cs) x = Rational(c(rng));
    return PolyQ("x", cs);
}
}  // namespace

TEST_CASE("gcd on the stated fixtures") {
    CHECK(poly_gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(poly_gcd(P("x+1"), P("x-1")) == P("1"));
    PolyQ common = P("(1+x)^5");
    CHECK(poly_gcd(common * P("2-x"), common * P("3+x^2")) == common.monic());
    CHECK(poly_gcd(PolyQ(), PolyQ()).is_zero());
}

TEST_CASE("gcd divides both inputs and leaves coprime quotients") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        PolyQ a = random_poly(rng, 8), b = random_poly(rng, 8);
        PolyQ g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.divides(a));
        CHECK(g.divides(b));
        if (!a.is_zero() && !b.is_zero())
            CHECK(poly_gcd(a.exact_div(g), b.exact_div(g)).is_one());
    }
}

TEST_CASE("polynomial division invariant") {
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        PolyQ a = random_poly(rng, 8), b = random_poly(rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly print/parse round-trip") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        PolyQ a = random_poly(rng, 6);
        if (a.is_zero()) continue;
        CHECK(parse_poly_q(poly_str(a), "x") == a);
    }
    CHECK(poly_str(P("x^2+x-1")) == "x^2+x-1");
    CHECK(poly_str(P("-x^2+3/2")) == "-x^2+3/2");
}

TEST_CASE("ratfun canonical form") {
    RatFunQ r(P("2*x^2-2"), P("4*x-4"));  // (2x^2-2)/(4x-4) = (x+1)/2
    CHECK(r.is_polynomial());
    CHECK(r == RatFunQ(P("x/2+1/2")));
    RatFunQ s = parse_ratfun_q("1/(1-x)", "x");
    CHECK(s.den().lc().is_one());
    CHECK(ratfun_str(s) == "(-1)/(x-1)");
    CHECK(parse_ratfun_q(ratfun_str(s), "x") == s);
}

TEST_CASE("ratfun arithmetic and shifted") {
    RatFunQ f = parse_ratfun_q("1/(x*(x+1))", "x");
    RatFunQ g = parse_ratfun_q("1/x - 1/(x+1)", "x");
    CHECK(f == g);
    CHECK(f.shifted(1) == parse_ratfun_q("1/((x+1)*(x+2))", "x"));
    CHECK(f.derivative() == parse_ratfun_q("-(2*x+1)/(x^2*(x+1)^2)", "x"));
    CHECK(f.eval(Rational(3)) == Rational(1, 12));
}

TEST_CASE("ratfun over Q(ep)") {
    auto f = parse_ratfun_eps("(x+ep)/(x-ep)", "x");
    auto num = f.num();
    CHECK(num.degree() == 1);
    CHECK(ratfun_str(f) == "(x+ep)/(x-ep)");
    CHECK(parse_ratfun_eps(ratfun_str(f), "x") == f);
    auto g = parse_ratfun_eps("1/(1-x)", "x");
    CHECK((f * g).den() == (parse_ratfun_eps("(x-ep)*(1-x)", "x")).num().monic());
}
