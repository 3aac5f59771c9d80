#include "oresolve/uncouple.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oresolve/parse.hpp"

namespace oresolve {

bool UncoupledBlock::plain() const {
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i == index) {
            if (!combo[i].is_one()) return false;
        } else if (!combo[i].is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

struct Probe {
    std::vector<std::vector<SysRat>> rows;  // w_0 .. w_{rho-1}
    std::vector<RhsComb> scombs;            // s_0 .. s_{rho-1}
    std::vector<SysRat> dep;                // w_rho = sum dep_i w_i
    RhsComb s_last;                         // s_rho
};

// sigma-iterate a functional row: derivative tau(w) = w' + w A,
// shift tau(w)(N) = w(N+1) A(N).
std::vector<SysRat> iterate_row(const std::vector<SysRat>& w, const Matrix<SysRat>& A,
                                OreKind kind) {
    if (kind == OreKind::Derivative) {
        std::vector<SysRat> out = row_times_matrix(w, A);
        for (std::size_t i = 0; i < w.size(); ++i) out[i] += w[i].derivative();
        return out;
    }
    std::vector<SysRat> ws(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) ws[i] = w[i].shifted(1);
    return row_times_matrix(ws, A);
}

RhsComb iterate_scomb(const RhsComb& s, const std::vector<SysRat>& w,
                      const std::vector<RhsComb>& rhs, OreKind kind) {
    // sigma^{k+1} J = w_{k+1} y + s_{k+1},
    //   derivative: s_{k+1} = D(s_k) + w_k . c
    //   shift:      s_{k+1} = s_k(N+1) + w_k(N+1) . c
    RhsComb out = rhs_sigma(s, kind);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        SysRat f = kind == OreKind::Shift ? w[i].shifted(1) : w[i];
        out = rhs_add(out, rhs_scale(rhs[i], f));
    }
    return out;
}

Probe close_row(const std::vector<SysRat>& w0, const Matrix<SysRat>& A,
                const std::vector<RhsComb>& rhs, OreKind kind) {
    Probe p;
    std::vector<SysRat> w = w0;
    RhsComb s{};
    while (true) {
        auto dep = express_in_rows(p.rows, w);
        if (dep) {
            p.dep = *dep;
            p.s_last = s;
            return p;
        }
        p.rows.push_back(w);
        p.scombs.push_back(s);
        s = iterate_scomb(s, w, rhs, kind);
        w = iterate_row(w, A, kind);
        if (p.rows.size() > A.rows + 1) throw Error("uncouple: closure failed to terminate");
    }
}

bool independent_of(const std::vector<std::vector<SysRat>>& span,
                    const std::vector<std::vector<SysRat>>& extra, std::size_t cols) {
    Matrix<SysRat> m(span.size() + extra.size(), cols);
    std::size_t r = 0;
    for (const auto& v : span) {
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = v[j];
        ++r;
    }
    for (const auto& v : extra) {
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = v[j];
        ++r;
    }
    return rank_of(m) == span.size() + extra.size();
}

}  // namespace

UncoupleResult uncouple(const CoupledSystem& sys) {
    auto Aopt = sys.explicit_matrix();
    if (!Aopt) throw Error("uncouple: expected an explicit first-order system (regularize first)");
    const Matrix<SysRat>& A = *Aopt;
    const std::size_t r = sys.dim();

    UncoupleResult res;
    res.kind = sys.kind;

    std::vector<std::vector<SysRat>> span;   // accepted block rows
    std::vector<std::size_t> row_block;      // parallel: owning block
    std::vector<long> row_power;             //           sigma power
    std::vector<RhsComb> row_scomb;          //           rhs part: sigma^p J = w y + s
    std::vector<bool> plain_block(r, false);

    // closures of all coordinate functionals
    std::vector<Probe> probes(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<SysRat> e(r, SysRat(0));
        e[i] = SysRat(1);
        probes[i] = close_row(e, A, sys.rhs, sys.kind);
    }

    auto accept_block = [&](std::size_t rep, std::vector<EpsRat> combo, const Probe& p) {
        UncoupledBlock blk;
        blk.index = rep;
        blk.combo = std::move(combo);
        std::size_t rho = p.rows.size();
        blk.op.kind = sys.kind;
        blk.op.coeffs.assign(rho + 1, SysRat(0));
        blk.op.coeffs[rho] = SysRat(1);
        RhsComb rhs = p.s_last;
        for (std::size_t i = 0; i < rho; ++i) {
            blk.op.coeffs[i] = -p.dep[i];
            rhs = rhs_add(rhs, rhs_scale(p.scombs[i], -p.dep[i]));
        }
        blk.rhs = std::move(rhs);
        for (std::size_t k = 0; k < rho; ++k) {
            span.push_back(p.rows[k]);
            row_block.push_back(res.blocks.size());
            row_power.push_back(static_cast<long>(k));
            row_scomb.push_back(p.scombs[k]);
        }
        res.blocks.push_back(std::move(blk));
    };

    std::mt19937 rng(0x5eedu);
    while (span.size() < r) {
        // candidates: coordinates not yet expressible over the span
        std::vector<std::size_t> cands;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<SysRat> e(r, SysRat(0));
            e[i] = SysRat(1);
            if (!express_in_rows(span, e)) cands.push_back(i);
        }
        if (cands.empty()) break;
        // prefer the largest closure, then the lowest index
        std::stable_sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
            return probes[a].rows.size() > probes[b].rows.size();
        });
        bool accepted = false;
        for (std::size_t i : cands) {
            if (!independent_of(span, probes[i].rows, r)) continue;
            std::vector<EpsRat> combo(r, EpsRat(0));
            combo[i] = EpsRat(1);
            plain_block[i] = true;
            accept_block(i, std::move(combo), probes[i]);
            accepted = true;
            break;
        }
        if (accepted) continue;
        // fallback: random constant change of unknowns
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int attempt = 0; attempt < 32 && !accepted; ++attempt) {
            std::size_t rep = cands.front();
            std::vector<SysRat> w(r, SysRat(0));
            std::vector<EpsRat> combo(r, EpsRat(0));
            for (std::size_t i = 0; i < r; ++i) {
                long c = i == rep ? 1 : coef(rng);
                if (c == 0) continue;
                combo[i] = EpsRat(Rational(c));
                w[i] = SysRat(EpsRat(Rational(c)));
            }
            Probe p = close_row(w, A, sys.rhs, sys.kind);
            if (!independent_of(span, p.rows, r)) continue;
            accept_block(rep, std::move(combo), p);
            accepted = true;
        }
        if (!accepted)
            throw PivotFailure("uncouple: no admissible block covers the remaining unknowns");
    }

    long order_sum = 0;
    for (const auto& b : res.blocks) order_sum += b.op.order();
    if (order_sum > static_cast<long>(r))
        throw Error("uncouple: order budget exceeded (internal invariant)");

    // complement rules: express every non-plain unknown over the span rows
    for (std::size_t t = 0; t < r; ++t) {
        if (plain_block[t]) continue;
        std::vector<SysRat> e(r, SysRat(0));
        e[t] = SysRat(1);
        auto lam = express_in_rows(span, e);
        if (!lam) throw PivotFailure("uncouple: complement unknown outside the covered span");
        ComplementRule rule;
        rule.unknown = t;
        // I_t = sum lam_k (w_k y) = sum lam_k (sigma^{p_k} J_{block_k} - s_k)
        RhsComb bpart;
        for (std::size_t k = 0; k < span.size(); ++k) {
            if ((*lam)[k].is_zero()) continue;
            rule.solved_refs.emplace_back(row_block[k], row_power[k], (*lam)[k]);
            bpart = rhs_add(bpart, rhs_scale(row_scomb[k], -(*lam)[k]));
        }
        rule.b_refs = std::move(bpart);
        res.rules.push_back(std::move(rule));
    }

    return res;
}

std::string uncouple_result_str(const UncoupleResult& res,
                                const std::vector<std::string>& unknown_names,
                                const std::vector<std::string>& rhs_names) {
    std::ostringstream os;
    auto name = [&](std::size_t i) {
        return i < unknown_names.size() ? unknown_names[i] : "I" + std::to_string(i + 1);
    };
    for (const auto& b : res.blocks) {
        os << "block " << name(b.index);
        if (!b.plain()) {
            os << " (= ";
            bool first = true;
            for (std::size_t i = 0; i < b.combo.size(); ++i) {
                if (b.combo[i].is_zero()) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << ratfun_str(b.combo[i]) << ")*" << name(i);
            }
            os << ")";
        }
        os << ": order " << b.op.order() << ", operator " << oreop_str(b.op) << " . rhs = "
           << rhs_comb_str(b.rhs, rhs_names) << "\n";
    }
    for (const auto& rule : res.rules) {
        os << name(rule.unknown) << " = ";
        bool first = true;
        for (const auto& [blk, pw, coeff] : rule.solved_refs) {
            if (!first) os << " + ";
            first = false;
            os << "(" << sysrat_str(coeff) << ")*sigma^" << pw << " "
               << name(res.blocks[blk].index);
        }
        if (!rule.b_refs.empty()) {
            if (!first) os << " + ";
            os << rhs_comb_str(rule.b_refs, rhs_names);
        }
        if (first && rule.b_refs.empty()) os << "0";
        os << "\n";
    }
    return os.str();
}

}  // namespace oresolve
