#include <doctest.h>

#include <random>

#include "oresolve/harmonic.hpp"

using namespace oresolve;

namespace {
HarmonicSum H(const std::vector<long>& w, const std::vector<Value>& x = {}) {
    return HarmonicSum::make(w, x);
}
}  // namespace

TEST_CASE("quasi-shuffle fixtures") {
    // S_1 * S_1 = 2 S_{1,1} - S_2
    SumExpr q = quasi_shuffle(H({1}), H({1}));
    SumExpr expect =
        SumExpr::harmonic(H({1, 1})).scaled(Value(2)) - SumExpr::harmonic(H({2}));
    CHECK(q.normalized().cmp(expect.normalized()) == 0);

    // identity element
    CHECK(quasi_shuffle(H({1}), H({})).normalized().cmp(
              SumExpr::harmonic(H({1})).normalized()) == 0);

    // S_2(1/2;N)*S_1(N) = S_{2,1}(1/2,1;N) + S_{1,2}(1,1/2;N) - S_3(1/2;N)
    Value half(Rational(1, 2));
    SumExpr lhs = quasi_shuffle(H({2}, {half}), H({1}));
    SumExpr rhs = SumExpr::harmonic(H({2, 1}, {half, Value(1)})) +
                  SumExpr::harmonic(H({1, 2}, {Value(1), half})) -
                  SumExpr::harmonic(H({3}, {half}));
    CHECK(lhs.normalized().cmp(rhs.normalized()) == 0);
    for (long n = 1; n <= 10; ++n)
        CHECK(lhs.eval(n) == H({2}, {half}).eval(n) * H({1}).eval(n));
}

TEST_CASE("quasi-shuffle agrees with evalAt for random pairs") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> depth(1, 2), w(1, 3), pick(0, 2);
    auto random_harm = [&]() {
        std::vector<long> ws;
        std::vector<Value> xs;
        int d = depth(rng);
        for (int i = 0; i < d; ++i) {
            ws.push_back(w(rng));
            Value letters[3] = {Value(1), Value(-1), Value(Rational(1, 2))};
            xs.push_back(letters[pick(rng)]);
        }
        return H(ws, xs);
    };
    for (int i = 0; i < 25; ++i) {
        HarmonicSum a = random_harm(), b = random_harm();
        SumExpr q = quasi_shuffle(a, b);
        for (long n = 1; n <= 8; ++n) CHECK(q.eval(n) == a.eval(n) * b.eval(n));
    }
}

TEST_CASE("quasi-shuffle commutativity and associativity") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> depth(1, 2), w(1, 2), pick(0, 1);
    auto random_harm = [&]() {
        std::vector<long> ws;
        std::vector<Value> xs;
        int d = depth(rng);
        for (int i = 0; i < d; ++i) {
            ws.push_back(w(rng));
            xs.push_back(pick(rng) ? Value(1) : Value(-1));
        }
        return H(ws, xs);
    };
    for (int i = 0; i < 10; ++i) {
        HarmonicSum a = random_harm(), b = random_harm(), c = random_harm();
        CHECK(quasi_shuffle(a, b).normalized().cmp(quasi_shuffle(b, a).normalized()) == 0);
        // associativity up to reduce_products normal form
        SumExpr ab_c = reduce_products(quasi_shuffle(a, b) * SumExpr::harmonic(c));
        SumExpr a_bc = reduce_products(SumExpr::harmonic(a) * quasi_shuffle(b, c));
        CHECK(ab_c.normalized().cmp(a_bc.normalized()) == 0);
    }
}

TEST_CASE("reduce_products fixtures") {
    // (S_1)^2 - 2 S_{1,1} + S_2 -> 0
    SumExpr e = SumExpr::harmonic(H({1})) * SumExpr::harmonic(H({1})) -
                SumExpr::harmonic(H({1, 1})).scaled(Value(2)) + SumExpr::harmonic(H({2}));
    CHECK(reduce_products(e).is_zero());

    // already reduced stays put
    SumExpr s21 = SumExpr::harmonic(H({2, 1}));
    CHECK(reduce_products(s21).cmp(s21.normalized()) == 0);

    // (N+1) S_1 S_2 -> (N+1)(S_{1,2}+S_{2,1}-S_3)
    SumExpr in = parse_sumexpr("(N+1)*S[1](N)*S[2](N)");
    SumExpr out = reduce_products(in);
    for (const auto& t : out.terms()) CHECK(t.harms.size() <= 1);
    for (long n = 0; n <= 10; ++n) CHECK(out.eval(n) == in.eval(n));
    SumExpr expect = parse_sumexpr("(N+1)*(Sum[1,S[2](k)/k](N)+Sum[1,S[1](k)/k^2](N)-S[3](N))");
    CHECK(equivalent(out, expect));
}

TEST_CASE("reduce_products preserves evalAt on the corpus") {
    for (const char* s : {
             "S[1](N)*S[1](N)*S[1](N)",
             "S[2,1](N)*S[1](N)",
             "(N^2+1)*S[-1](N)*S[-1](N)",
             "S[{1},{1/2}](N)*S[{2},{-1/2}](N)",
             "Pow(2,N)*S[1](N)*S[2](N)+S[1](N)",
         }) {
        SumExpr in = parse_sumexpr(s);
        SumExpr out = reduce_products(in);
        for (const auto& t : out.terms()) CHECK(t.harms.size() <= 1);
        for (long n = 0; n <= 20; ++n) CHECK(out.eval(n) == in.eval(n));
    }
}

TEST_CASE("synchronize_shift fixtures") {
    // S_1(N+1) = S_1(N) + 1/(N+1)
    SumExpr s1 = parse_sumexpr("S[1](N)");
    SumExpr sh = synchronize_shift(s1, 1);
    CHECK(sh.cmp(parse_sumexpr("S[1](N)+1/(N+1)").normalized()) == 0);

    // S_{2,1}(N+1) = S_{2,1}(N) + (S_1(N) + 1/(N+1))/(N+1)^2
    SumExpr s21 = parse_sumexpr("S[2,1](N)");
    SumExpr sh21 = synchronize_shift(s21, 1);
    SumExpr expect = parse_sumexpr("S[2,1](N)+(S[1](N)+1/(N+1))/(N+1)^2").normalized();
    CHECK(sh21.cmp(expect) == 0);
    for (long n = 0; n <= 12; ++n) CHECK(sh21.eval(n) == s21.eval(n + 1));

    // identity shift
    CHECK(synchronize_shift(s21, 0).cmp(s21.normalized()) == 0);
}

TEST_CASE("shift round-trip: up then down") {
    for (const char* s : {
             "S[1](N)",
             "S[2,1](N)",
             "(N+1)*S[{2},{1/2}](N)",
             "Pow(3,N)*S[1](N)",
             "Prod[1,(k+2)/k](N)",
             "Sum[1,S[1](k)/k](N)",
         }) {
        SumExpr e = parse_sumexpr(s);
        SumExpr rt = synchronize_shift(synchronize_shift(e, 1), -1);
        long start = std::max(e.offset(), rt.offset());
        for (long n = start; n < start + 15; ++n) CHECK(rt.eval(n) == e.eval(n));
    }
}

TEST_CASE("shift by larger steps matches evaluation") {
    SumExpr e = parse_sumexpr("S[2,1](N)*Pow(2,N)");
    SumExpr sh = synchronize_shift(e, 3);
    for (long n = 0; n <= 10; ++n) CHECK(sh.eval(n) == e.eval(n + 3));
    SumExpr down = synchronize_shift(e, -2);
    for (long n = 2; n <= 12; ++n) CHECK(down.eval(n) == e.eval(n - 2));
}

TEST_CASE("recognize_harmonics rewrites definitional sums") {
    SumExpr in = parse_sumexpr("Sum[1,S[1](k)/k^2](N)");
    SumExpr out = recognize_harmonics(in);
    CHECK(out.cmp(parse_sumexpr("S[2,1](N)").normalized()) == 0);

    // lower bound 3 needs a boundary correction
    SumExpr in2 = parse_sumexpr("Sum[3,1/k](N)");
    SumExpr out2 = recognize_harmonics(in2);
    CHECK(equivalent(out2, parse_sumexpr("S[1](N)-3/2")));
}
