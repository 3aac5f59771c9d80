#include <doctest.h>

#include "ore_helpers.hpp"

using namespace oresolve;
using namespace oretest;

namespace {

Matrix<SysRat> M2(const char* a, const char* b, const char* c, const char* d,
                  const std::string& var = "N") {
    Matrix<SysRat> m(2, 2);
    m.at(0, 0) = SR(a, var);
    m.at(0, 1) = SR(b, var);
    m.at(1, 0) = SR(c, var);
    m.at(1, 1) = SR(d, var);
    return m;
}

RhsComb bref(std::size_t j, long power = 0, const char* coeff = "1") {
    return {RhsRef{j, power, SR(coeff)}};
}

}  // namespace

TEST_CASE("to_first_order: Fibonacci companion") {
    // I(N+2) - I(N+1) - I(N) = 0
    CoupledSystem sys;
    sys.kind = OreKind::Shift;
    Matrix<SysRat> a0(1, 1), a1(1, 1), a2(1, 1);
    a0.at(0, 0) = SR("-1");
    a1.at(0, 0) = SR("-1");
    a2.at(0, 0) = SR("1");
    sys.mats = {a0, a1, a2};
    sys.rhs.resize(1);

    auto red = to_first_order(sys);
    CHECK(red.sys.dim() == 2);
    CHECK(red.heights[0] == 2);

    auto reg = regularize(red.sys);
    CHECK(reg.survivors.size() == 2);
    auto A = reg.sys.explicit_matrix();
    REQUIRE(A.has_value());

    // iterate the explicit system from (I(0), I(1)) = (0, 1); slot base holds I
    std::vector<Rational> y = {Rational(0), Rational(1)};
    Seq fib = {Rational(0), Rational(1)};
    for (long n = 0; n < 28; ++n) {
        std::vector<Rational> next(2);
        for (std::size_t i = 0; i < 2; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < 2; ++j) acc += sysval(A->at(i, j), n) * y[j];
            next[i] = acc;
        }
        y = next;
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        // the base slot of the original unknown carries I(n+1)
        CHECK(y[red.base_slot[0]] == fib[static_cast<std::size_t>(n) + 1]);
    }
}

TEST_CASE("to_first_order: first-order input is returned unchanged") {
    CoupledSystem sys = CoupledSystem::first_order(OreKind::Shift, M2("2", "0", "1", "N"), {});
    auto red = to_first_order(sys);
    CHECK(red.sys.order() == 1);
    CHECK(red.base_slot == std::vector<std::size_t>{0, 1});
    CHECK(red.sys.mats[0].at(0, 0) == sys.mats[0].at(0, 0));
}

TEST_CASE("to_first_order: mixed heights via substitution oracle") {
    // unknown 1 appears up to shift 2, unknown 2 up to shift 1 -> dimension 3
    CoupledSystem sys;
    sys.kind = OreKind::Shift;
    Matrix<SysRat> a0(2, 2), a1(2, 2), a2(2, 2);
    a0.at(0, 0) = SR("1");
    a0.at(0, 1) = SR("2");
    a0.at(1, 0) = SR("N");
    a0.at(1, 1) = SR("1");
    a1.at(0, 0) = SR("N+1");
    a1.at(1, 1) = SR("-1");
    a2.at(0, 0) = SR("1");
    sys.mats = {a0, a1, a2};
    sys.rhs = {bref(0), bref(1)};

    auto red = to_first_order(sys);
    CHECK(red.sys.dim() == 3);

    // random original sequences; b defined by the equations themselves
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> d(-5, 5);
    Seq I1(33), I2(33);
    for (auto& v : I1) v = Rational(d(rng));
    for (auto& v : I2) v = Rational(d(rng));
    std::vector<Seq> I = {I1, I2};
    std::vector<Seq> b(2, Seq(33, Rational(0)));
    for (long n = 0; n + 2 < 33; ++n) {
        for (std::size_t row = 0; row < 2; ++row) {
            Rational acc(0);
            for (long l = 0; l <= 2; ++l)
                for (std::size_t i = 0; i < 2; ++i) {
                    const SysRat& c = sys.mats[static_cast<std::size_t>(l)].at(row, i);
                    if (!c.is_zero()) acc += sysval(c, n) * I[i][static_cast<std::size_t>(n + l)];
                }
            b[row][static_cast<std::size_t>(n)] = acc;
        }
    }

    // auxiliary sequences y_{i,j}(n) = I_i(n+j) must satisfy the reduced system
    std::vector<Seq> y(red.sys.dim());
    for (std::size_t i = 0; i < 2; ++i)
        for (long j = 0; j < red.heights[i]; ++j) {
            Seq s(31);
            for (long n = 0; n + j < 33 && n < 31; ++n)
                s[static_cast<std::size_t>(n)] = I[i][static_cast<std::size_t>(n + j)];
            y[red.base_slot[i] + static_cast<std::size_t>(j)] = s;
        }
    for (long n = 0; n + 2 < 31; ++n)
        for (std::size_t row = 0; row < red.sys.dim(); ++row)
            CHECK(system_row_residual(red.sys, y, b, row, n) == Rational(0));
}

TEST_CASE("regularize: invertible input is unchanged") {
    CoupledSystem sys = CoupledSystem::first_order(OreKind::Shift, M2("2", "1", "0", "3"),
                                                   {bref(0), bref(1)});
    auto reg = regularize(sys);
    CHECK(!reg.changed);
    CHECK(reg.survivors == std::vector<std::size_t>{0, 1});
    CHECK(reg.rules.empty());
}

TEST_CASE("regularize: rank-one matrix eliminates one unknown") {
    CoupledSystem sys = CoupledSystem::first_order(OreKind::Shift, M2("1", "1", "1", "1"),
                                                   {bref(0), bref(1)});
    auto reg = regularize(sys);
    CHECK(reg.changed);
    CHECK(reg.survivors.size() == 1);
    REQUIRE(reg.rules.size() == 1);
    auto A = reg.sys.explicit_matrix();
    REQUIRE(A.has_value());

    // property: on random b, solving the reduced system and mapping back
    // through the rule satisfies the original system
    std::mt19937 rng(67);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Seq> b(2, Seq(32));
        for (auto& s : b)
            for (auto& v : s) v = Rational(d(rng));
        std::size_t surv = reg.survivors[0];
        // iterate the reduced system from a random start at N = 1 (the rule
        // references b(N-1), so begin past the boundary)
        std::vector<Seq> I(2, Seq(32, Rational(0)));
        I[surv][1] = Rational(d(rng));
        for (long n = 1; n + 1 < 32; ++n) {
            Rational acc = sysval(A->at(0, 0), n) * I[surv][static_cast<std::size_t>(n)];
            acc += rhs_comb_value(reg.sys.rhs[0], b, n);
            I[surv][static_cast<std::size_t>(n + 1)] = acc;
        }
        // reconstruct the eliminated unknown
        const LinearRule& rule = reg.rules[0];
        for (long n = 1; n < 32; ++n) {
            Rational acc = rhs_comb_value(rule.b_part, b, n);
            for (const auto& [dep, coeff] : rule.deps)
                acc += sysval(coeff, n) * I[dep][static_cast<std::size_t>(n)];
            I[rule.unknown][static_cast<std::size_t>(n)] = acc;
        }
        // original system rows hold for N >= 1
        for (long n = 1; n + 1 < 32; ++n)
            for (std::size_t row = 0; row < 2; ++row)
                CHECK(system_row_residual(sys, I, b, row, n) == Rational(0));
    }
}

TEST_CASE("regularize: zero matrix reads every unknown off b") {
    CoupledSystem sys = CoupledSystem::first_order(OreKind::Shift, M2("0", "0", "0", "0"),
                                                   {bref(0), bref(1)});
    auto reg = regularize(sys);
    CHECK(reg.survivors.empty());
    CHECK(reg.rules.size() == 2);
    for (const auto& rule : reg.rules) {
        CHECK(rule.deps.empty());
        CHECK(rule.b_part.size() == 1);
    }
}

TEST_CASE("uncouple: swap system gives D^2 - 1") {
    // D I1 = I2, D I2 = I1
    CoupledSystem sys = CoupledSystem::first_order(OreKind::Derivative,
                                                   M2("0", "1", "1", "0", "x"), {});
    auto res = uncouple(sys);
    REQUIRE(res.blocks.size() == 1);
    const auto& blk = res.blocks[0];
    CHECK(blk.index == 0);
    CHECK(blk.plain());
    CHECK(blk.op.order() == 2);
    CHECK(blk.op.coeffs[0] == SR("-1", "x"));
    CHECK(blk.op.coeffs[1].is_zero());
    CHECK(blk.op.coeffs[2] == SR("1", "x"));
    CHECK(blk.rhs.empty());
    REQUIRE(res.rules.size() == 1);
    CHECK(res.rules[0].unknown == 1);
    REQUIRE(res.rules[0].solved_refs.size() == 1);
    auto [b, p, c] = res.rules[0].solved_refs[0];
    CHECK(b == 0);
    CHECK(p == 1);
    CHECK(c == SR("1", "x"));
}

TEST_CASE("uncouple: block-diagonal input stays in two order-1 blocks") {
    CoupledSystem sys = CoupledSystem::first_order(
        OreKind::Derivative, M2("1/(1-x)", "0", "0", "1", "x"), {bref(0), {}});
    auto res = uncouple(sys);
    REQUIRE(res.blocks.size() == 2);
    for (const auto& blk : res.blocks) {
        CHECK(blk.op.order() == 1);
        CHECK(blk.plain());
    }
    CHECK(res.rules.empty());
}

TEST_CASE("uncouple soundness: substitution identity on shift systems") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = 2 + static_cast<std::size_t>(trial % 3);
        const long T = 34;
        // random solution sequences and invertible-ish random matrix
        Matrix<SysRat> A(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) A.at(i, j) = SR(std::to_string(d(rng)));
        std::vector<Seq> I(r, Seq(static_cast<std::size_t>(T)));
        for (auto& s : I)
            for (auto& v : s) v = Rational(d(rng));
        // b defined pointwise so that I solves sigma I = A I + b with b_j = e_j
        std::vector<Seq> b(r, Seq(static_cast<std::size_t>(T)));
        for (long n = 0; n + 1 < T; ++n)
            for (std::size_t i = 0; i < r; ++i) {
                Rational acc = I[i][static_cast<std::size_t>(n + 1)];
                for (std::size_t j = 0; j < r; ++j)
                    acc -= sysval(A.at(i, j), n) * I[j][static_cast<std::size_t>(n)];
                b[i][static_cast<std::size_t>(n)] = acc;
            }
        std::vector<RhsComb> rhs(r);
        for (std::size_t i = 0; i < r; ++i) rhs[i] = bref(i);
        CoupledSystem sys = CoupledSystem::first_order(OreKind::Shift, A, rhs);

        UncoupleResult res;
        try {
            res = uncouple(sys);
        } catch (const PivotFailure&) {
            continue;  // degenerate random instance
        }

        long order_sum = 0;
        for (const auto& blk : res.blocks) order_sum += blk.op.order();
        CHECK(order_sum <= static_cast<long>(r));

        // J sequences from combos
        auto combo_value = [&](const UncoupledBlock& blk, long n) {
            Rational acc(0);
            for (std::size_t i = 0; i < r; ++i)
                if (!blk.combo[i].is_zero())
                    acc += blk.combo[i].eval(Rational(0)) * I[i][static_cast<std::size_t>(n)];
            return acc;
        };
        // scalar operators annihilate J up to their rhs
        for (const auto& blk : res.blocks) {
            for (long n = 1; n + blk.op.order() + 1 < T - 2; ++n) {
                Rational acc(0);
                bool pole = false;
                try {
                    for (long i = 0; i <= blk.op.order(); ++i)
                        if (!blk.op.coeffs[static_cast<std::size_t>(i)].is_zero())
                            acc += sysval(blk.op.coeffs[static_cast<std::size_t>(i)], n) *
                                   combo_value(blk, n + i);
                    acc -= rhs_comb_value(blk.rhs, b, n);
                } catch (const EvalPole&) {
                    pole = true;
                }
                if (!pole) CHECK(acc == Rational(0));
            }
        }
        // complement rules reproduce the unknowns
        for (const auto& rule : res.rules) {
            for (long n = 1; n + static_cast<long>(r) + 1 < T - 2; ++n) {
                Rational acc(0);
                bool pole = false;
                try {
                    for (const auto& [blk, pw, coeff] : rule.solved_refs)
                        acc += sysval(coeff, n) * combo_value(res.blocks[blk], n + pw);
                    acc += rhs_comb_value(rule.b_refs, b, n);
                } catch (const EvalPole&) {
                    pole = true;
                }
                if (!pole) CHECK(acc == I[rule.unknown][static_cast<std::size_t>(n)]);
            }
        }
    }
}
