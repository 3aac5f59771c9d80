#include <doctest.h>

#include <random>

#include "oresolve/holonomic.hpp"
#include "oresolve/parse.hpp"

using namespace oresolve;

namespace {

SysRat X(const std::string& s) { return parse_ratfun_eps(s, "x"); }
SysRat NN(const std::string& s) { return parse_ratfun_eps(s, "N"); }

Rational nval(const SysRat& f, long n) { return f.eval(EpsRat(Rational(n))).eval(Rational(0)); }

// residual of the recurrence on sequences, rhs symbolic over b sequences
Rational rec_residual(const ScalarRec& rec, const std::vector<Rational>& f,
                      const std::vector<std::vector<Rational>>& b, long n) {
    Rational acc(0);
    for (long j = 0; j <= rec.op.order(); ++j) {
        const SysRat& c = rec.op.coeffs[static_cast<std::size_t>(j)];
        if (!c.is_zero()) acc += nval(c, n) * f[static_cast<std::size_t>(n + j)];
    }
    for (const auto& r : rec.rhs) acc -= nval(r.coeff, n) * b[r.j][static_cast<std::size_t>(n + r.power)];
    return acc;
}

}  // namespace

TEST_CASE("ode_to_rec: (1-x) f' - f = 0") {
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("-1"), X("1-x")};
    ScalarRec rec = ode_to_rec(ode);
    REQUIRE(rec.op.order() == 1);
    CHECK(rec.op.coeffs[0] == NN("-(N+1)"));
    CHECK(rec.op.coeffs[1] == NN("N+1"));
    CHECK(rec.valid_from == 0);
    CHECK(rec.side.empty());
}

TEST_CASE("ode_to_rec: f' - f = 0") {
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("-1"), X("1")};
    ScalarRec rec = ode_to_rec(ode);
    REQUIRE(rec.op.order() == 1);
    CHECK(rec.op.coeffs[0] == NN("-1"));
    CHECK(rec.op.coeffs[1] == NN("N+1"));
}

TEST_CASE("ode_to_rec: x^2 f'' + x f' - f = b") {
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("-1"), X("x"), X("x^2")};
    ode.rhs = {RhsRef{0, 0, X("1")}};
    ScalarRec rec = ode_to_rec(ode);
    CHECK(rec.op.order() == 0);
    CHECK(rec.op.coeffs[0] == NN("N^2-1"));
    REQUIRE(rec.rhs.size() == 1);
    CHECK(rec.rhs[0].power == 0);
    CHECK(rec.rhs[0].coeff == NN("1"));

    // soundness on a random truncated series: residual of the ODE vanishes
    // iff the recurrence residual vanishes
    std::mt19937 rng(73);
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Rational> f(32), bb(32);
    for (long n = 0; n < 32; ++n) f[static_cast<std::size_t>(n)] = Rational(d(rng));
    // choose b so the recurrence holds: b(N) = (N^2-1) f(N)
    for (long n = 0; n < 32; ++n)
        bb[static_cast<std::size_t>(n)] = Rational(n * n - 1) * f[static_cast<std::size_t>(n)];
    for (long n = rec.valid_from; n < 30; ++n)
        CHECK(rec_residual(rec, f, {bb}, n) == Rational(0));
}

TEST_CASE("gcd_reduce strips constructed common factors") {
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("(1+x)^5"), X("(1+x)^5*x")};
    ScalarODE red = gcd_reduce(ode);
    CHECK(red.op.coeffs[0] == X("1"));
    CHECK(red.op.coeffs[1] == X("x"));

    ScalarODE coprime;
    coprime.op.kind = OreKind::Derivative;
    coprime.op.coeffs = {X("1+x"), X("1-x")};
    ScalarODE same = gcd_reduce(coprime);
    CHECK(same.op.coeffs[0] == coprime.op.coeffs[0]);
    CHECK(same.op.coeffs[1] == coprime.op.coeffs[1]);
}

TEST_CASE("gcd_reduce drops the recurrence order by the inflation degree") {
    // base: (1-x) f' - f = 0 (geometric series), inflated by (1-2x)^3
    ScalarODE base;
    base.op.kind = OreKind::Derivative;
    base.op.coeffs = {X("-1"), X("1-x")};
    ScalarODE inflated = base;
    for (auto& c : inflated.op.coeffs) c *= X("(1-2*x)^3");

    ScalarRec raw = ode_to_rec(inflated);
    ScalarRec red = ode_to_rec(gcd_reduce(inflated));
    CHECK(red.op.order() == 1);
    CHECK(raw.op.order() - red.op.order() >= 3);

    // both recurrences annihilate the geometric sequence f(N) = 1
    std::vector<Rational> ones(40, Rational(1));
    for (long n = raw.valid_from; n < 30; ++n) CHECK(rec_residual(raw, ones, {}, n) == Rational(0));
    for (long n = red.valid_from; n < 30; ++n) CHECK(rec_residual(red, ones, {}, n) == Rational(0));
}

TEST_CASE("gcd_reduce turns rhs multipliers rational and ode_to_rec flags them") {
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("(1+x)^2"), X("(1+x)^2*(1-x)")};
    ode.rhs = {RhsRef{0, 0, X("1")}};
    ScalarODE red = gcd_reduce(ode);
    REQUIRE(red.rhs.size() == 1);
    CHECK(!red.rhs[0].coeff.is_polynomial());
    CHECK_THROWS_AS(ode_to_rec(red), NonPolynomialRhs);
    ScalarRec rec = ode_to_rec(red, true);
    REQUIRE(rec.rational_rhs.size() == 1);
    CHECK(rec.rhs.empty());
}

TEST_CASE("side relations appear when high powers of x multiply low derivatives") {
    // x^2 f' - f = 0: comparisons at n = 0,1 involve dropped negative indices
    ScalarODE ode;
    ode.op.kind = OreKind::Derivative;
    ode.op.coeffs = {X("-1"), X("x^2")};
    ScalarRec rec = ode_to_rec(ode);
    // the K-indexed recurrence covers comparisons n >= 1; n = 0 is a side row
    CHECK(rec.comparison_shift == -1);
    CHECK(rec.op.coeffs[0] == NN("N"));
    CHECK(rec.op.coeffs[1] == NN("-1"));
    CHECK(!rec.side.empty());
    // the side relation at n=0 reads -f(0) = 0
    const SideRelation& sr = rec.side[0];
    CHECK(sr.n == 0);
    REQUIRE(sr.lhs.size() == 1);
    CHECK(sr.lhs[0].first == 0);
}
