#include <doctest.h>

#include "oresolve/epslaurent.hpp"
#include "oresolve/errors.hpp"
#include "oresolve/parse.hpp"

using namespace oresolve;

namespace {
SumExpr S(const char* s) { return parse_sumexpr(s); }
EpsRat E(const char* s) {
    // pure functions of ep are constants of the x-rational field
    return parse_ratfun_eps(s, "x").constant_value();
}
}  // namespace

TEST_CASE("termwise addition keeps the joint window") {
    EpsLaurent a(-1, {S("1"), S("S[1](N)")});  // ep^-1 + ep^0 S_1
    EpsLaurent b(0, {S("2")});
    EpsLaurent c = eps_add(a, b);
    CHECK(c.low == -1);
    CHECK(c.high() == 0);
    CHECK(c.at(-1).cmp(S("1").normalized()) == 0);
    CHECK(c.at(0).cmp(S("S[1](N)+2").normalized()) == 0);
}

TEST_CASE("multiplication windows truncate correctly") {
    EpsLaurent a(-1, {S("1")});
    EpsLaurent b(1, {S("S[2](N)")});
    EpsLaurent c = eps_mul(a, b);
    CHECK(c.low == 0);
    CHECK(c.high() == 0);
    CHECK(c.at(0).cmp(S("S[2](N)").normalized()) == 0);
}

TEST_CASE("scaling by a rational function of ep") {
    EpsLaurent a(-1, {S("1"), S("S[1](N)")});
    EpsLaurent c = eps_scale(a, E("1+2*ep"));
    CHECK(c.low == -1);
    CHECK(c.high() == 0);
    CHECK(c.at(-1).cmp(S("1").normalized()) == 0);
    CHECK(c.at(0).cmp(S("S[1](N)+2").normalized()) == 0);

    // scaling by ep^2/(1-ep) shifts the window
    EpsLaurent d = eps_scale(a, E("ep^2/(1-ep)"));
    CHECK(d.low == 1);
    CHECK(d.high() == 2);
    CHECK(d.at(1).cmp(S("1").normalized()) == 0);
    CHECK(d.at(2).cmp(S("S[1](N)+1").normalized()) == 0);
}

TEST_CASE("empty windows are reported") {
    EpsLaurent a(0, {S("1")});
    EpsLaurent b(2, {S("1")});
    // below-window coefficients are exactly zero, so the sum is still known
    // on [0..0]; knowledge beyond the truncation is an error
    EpsLaurent c = eps_add(a, b);
    CHECK(c.low == 0);
    CHECK(c.high() == 0);
    CHECK_THROWS_AS(a.at(5), EmptyWindow);
    CHECK_THROWS_AS(c.truncated(0, 1), EmptyWindow);
    CHECK_THROWS_AS(a.truncated(1, 0), EmptyWindow);
    CHECK(a.at(-3).is_zero());
}

TEST_CASE("associativity and distributivity within the window") {
    EpsLaurent a(-1, {S("1"), S("S[1](N)"), S("S[2](N)")});
    EpsLaurent b(0, {S("N"), S("1")});
    EpsLaurent c(0, {S("S[1](N)"), S("3")});
    auto lhs = eps_mul(a, eps_add(b, c));
    auto rhs = eps_add(eps_mul(a, b), eps_mul(a, c));
    CHECK(lhs.low == rhs.low);
    CHECK(lhs.high() == rhs.high());
    for (int t = lhs.low; t <= lhs.high(); ++t) CHECK(equivalent(lhs.at(t), rhs.at(t)));
    auto ab_c = eps_mul(eps_mul(a, b), c);
    auto a_bc = eps_mul(a, eps_mul(b, c));
    CHECK(ab_c.low == a_bc.low);
    CHECK(ab_c.high() == a_bc.high());
    for (int t = ab_c.low; t <= ab_c.high(); ++t) CHECK(equivalent(ab_c.at(t), a_bc.at(t)));
}

TEST_CASE("eps expansion of rational functions of N and ep") {
    // 1/(N+1+ep) = 1/(N+1) - ep/(N+1)^2 + ...
    auto c = parse_ratfun_eps("1/(N+1+ep)", "N");
    auto coeffs = eps_expand_nrat(c, 0, 3);
    CHECK(coeffs[0] == parse_ratfun_v("1/(N+1)", "N"));
    CHECK(coeffs[1] == parse_ratfun_v("-1/(N+1)^2", "N"));
    CHECK(coeffs[2] == parse_ratfun_v("1/(N+1)^3", "N"));

    // pole in ep: (N+ep)/ep starts at order -1
    auto d = parse_ratfun_eps("(N+ep)/ep", "N");
    auto dc = eps_expand_nrat(d, -1, 3);
    CHECK(dc[0] == parse_ratfun_v("N", "N"));
    CHECK(dc[1] == parse_ratfun_v("1", "N"));
    CHECK(dc[2] == parse_ratfun_v("0", "N"));
}
