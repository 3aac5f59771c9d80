#include "oresolve/coupled.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "oresolve/parse.hpp"

namespace oresolve {

// ------------------------------------------------------------------ RhsComb

RhsComb rhs_normalized(RhsComb c) {
    std::map<std::pair<std::size_t, long>, SysRat> acc;
    for (auto& r : c) {
        auto key = std::make_pair(r.j, r.power);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, r.coeff);
        else
            it->second += r.coeff;
    }
    RhsComb out;
    for (auto& [key, coeff] : acc)
        if (!coeff.is_zero()) out.push_back({key.first, key.second, coeff});
    return out;
}

RhsComb rhs_add(const RhsComb& a, const RhsComb& b) {
    RhsComb c = a;
    c.insert(c.end(), b.begin(), b.end());
    return rhs_normalized(std::move(c));
}

RhsComb rhs_scale(const RhsComb& a, const SysRat& f) {
    if (f.is_zero()) return {};
    RhsComb c = a;
    for (auto& r : c) r.coeff *= f;
    return rhs_normalized(std::move(c));
}

RhsComb rhs_sigma(const RhsComb& a, OreKind kind) {
    RhsComb out;
    if (kind == OreKind::Shift) {
        for (const auto& r : a) out.push_back({r.j, r.power + 1, r.coeff.shifted(1)});
    } else {
        for (const auto& r : a) {
            SysRat dc = r.coeff.derivative();
            if (!dc.is_zero()) out.push_back({r.j, r.power, dc});
            out.push_back({r.j, r.power + 1, r.coeff});
        }
    }
    return rhs_normalized(std::move(out));
}

std::string sysrat_str(const SysRat& r) { return ratfun_str(r); }

Rational sysrat_to_rational(const SysRat& r) {
    if (!r.is_constant()) throw Error("coefficient is not constant: " + sysrat_str(r));
    EpsRat e = r.constant_value();
    if (!e.is_constant()) throw Error("coefficient still depends on ep: " + sysrat_str(r));
    return e.constant_value();
}

std::string rhs_comb_str(const RhsComb& c, const std::vector<std::string>& names) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& r : c) {
        if (!first) os << " + ";
        first = false;
        std::string nm = r.j < names.size() ? names[r.j] : "b" + std::to_string(r.j + 1);
        os << "(" << sysrat_str(r.coeff) << ")*" << nm << "[" << r.power << "]";
    }
    return os.str();
}

std::string oreop_str(const OreOp& op) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < op.coeffs.size(); ++i) {
        if (i) os << ", ";
        os << sysrat_str(op.coeffs[i]);
    }
    os << "}";
    return os.str();
}

// -------------------------------------------------------------- CoupledSystem

CoupledSystem CoupledSystem::first_order(OreKind kind, const Matrix<SysRat>& A,
                                         std::vector<RhsComb> rhs) {
    CoupledSystem s;
    s.kind = kind;
    s.mats = {A.scaled(SysRat(-1)), Matrix<SysRat>::identity(A.rows)};
    s.rhs = std::move(rhs);
    if (s.rhs.empty()) s.rhs.resize(A.rows);
    return s;
}

std::optional<Matrix<SysRat>> CoupledSystem::explicit_matrix() const {
    if (order() != 1) return std::nullopt;
    // require mats[1] == Id
    const auto& m1 = mats[1];
    for (std::size_t i = 0; i < m1.rows; ++i)
        for (std::size_t j = 0; j < m1.cols; ++j) {
            bool diag = i == j;
            if (diag && !m1.at(i, j).is_one()) return std::nullopt;
            if (!diag && !m1.at(i, j).is_zero()) return std::nullopt;
        }
    return mats[0].scaled(SysRat(-1));
}

// ------------------------------------------------------------ to_first_order

FirstOrderReduction to_first_order(const CoupledSystem& sys) {
    if (sys.kind != OreKind::Shift) throw Error("to_first_order: shift systems only");
    FirstOrderReduction out;
    const std::size_t r = sys.dim();
    const long m = sys.order();
    if (m <= 1) {
        out.sys = sys;
        out.base_slot.resize(r);
        out.heights.assign(r, 1);
        for (std::size_t i = 0; i < r; ++i) out.base_slot[i] = i;
        return out;
    }
    // n_i = highest shift of unknown i that occurs
    std::vector<long> heights(r, 0);
    for (long l = 0; l <= m; ++l)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t row = 0; row < r; ++row)
                if (!sys.mats[static_cast<std::size_t>(l)].at(row, i).is_zero())
                    heights[i] = std::max(heights[i], l);
    for (auto& h : heights) h = std::max(h, 1L);

    std::vector<std::size_t> base(r);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < r; ++i) {
        base[i] = dim;
        dim += static_cast<std::size_t>(heights[i]);
    }

    Matrix<SysRat> P(dim, dim), Q(dim, dim);
    std::vector<RhsComb> rhs(dim);
    std::size_t row = 0;
    // chain relations y_{i,j}(N+1) = y_{i,j+1}(N)
    for (std::size_t i = 0; i < r; ++i) {
        for (long j = 0; j + 1 < heights[i]; ++j) {
            P.at(row, base[i] + static_cast<std::size_t>(j)) = SysRat(1);
            Q.at(row, base[i] + static_cast<std::size_t>(j + 1)) = SysRat(-1);
            ++row;
        }
    }
    // original equations with I_i(N+l) -> y_{i,l}(N) for l < n_i, else
    // y_{i,n_i-1}(N+1)
    for (std::size_t e = 0; e < r; ++e) {
        for (long l = 0; l <= m; ++l) {
            for (std::size_t i = 0; i < r; ++i) {
                const SysRat& c = sys.mats[static_cast<std::size_t>(l)].at(e, i);
                if (c.is_zero()) continue;
                if (l < heights[i])
                    Q.at(row, base[i] + static_cast<std::size_t>(l)) += c;
                else
                    P.at(row, base[i] + static_cast<std::size_t>(heights[i] - 1)) += c;
            }
        }
        rhs[row] = sys.rhs[e];
        ++row;
    }

    out.sys.kind = OreKind::Shift;
    out.sys.mats = {Q, P};
    out.sys.rhs = std::move(rhs);
    out.base_slot = std::move(base);
    out.heights = std::move(heights);
    return out;
}

// ---------------------------------------------------------------- regularize

namespace {

struct Pencil {
    Matrix<SysRat> P, Q;          // P y(N+1) + Q y(N) = c
    std::vector<RhsComb> c;
    std::vector<std::size_t> ids;  // column -> input unknown index
};

SysRat shift_if(const SysRat& f, OreKind kind, long j) {
    return kind == OreKind::Shift ? f.shifted(j) : f;
}

RhsComb rhs_shift_if(const RhsComb& c, OreKind kind, long j) {
    if (kind != OreKind::Shift || j == 0) return c;
    RhsComb out;
    for (const auto& r : c) out.push_back({r.j, r.power + j, r.coeff.shifted(j)});
    return rhs_normalized(std::move(out));
}

// Remove unknown `col`, defined by rule (deps over remaining columns at the
// same argument, plus a b-part).  `level` says whether the defining relation
// lives at argument N (0) or N+1 (1); substitution into the other level uses
// the rule shifted accordingly for shift systems.
void substitute_out(Pencil& p, OreKind kind, std::size_t col,
                    const std::vector<SysRat>& deps_at_n, const RhsComb& bpart_at_n,
                    std::vector<LinearRule>& rules) {
    const std::size_t n = p.ids.size();
    // record the rule over input indices
    LinearRule rule;
    rule.unknown = p.ids[col];
    for (std::size_t j = 0; j < n; ++j) {
        if (j == col || deps_at_n[j].is_zero()) continue;
        rule.deps.emplace_back(p.ids[j], deps_at_n[j]);
    }
    rule.b_part = bpart_at_n;

    // substitute into earlier rules
    for (auto& old : rules) {
        SysRat f;
        bool hit = false;
        std::vector<std::pair<std::size_t, SysRat>> kept;
        for (auto& [dep, coeff] : old.deps) {
            if (dep == rule.unknown) {
                f = coeff;
                hit = true;
            } else {
                kept.emplace_back(dep, coeff);
            }
        }
        if (!hit) continue;
        old.deps = std::move(kept);
        for (const auto& [dep, coeff] : rule.deps) {
            bool merged = false;
            for (auto& [d2, c2] : old.deps)
                if (d2 == dep) {
                    c2 += f * coeff;
                    merged = true;
                }
            if (!merged) old.deps.emplace_back(dep, f * coeff);
        }
        old.b_part = rhs_add(old.b_part, rhs_scale(rule.b_part, f));
    }

    // substitute into the pencil: y_col(N) = sum deps*y(N) + bpart, and the
    // shifted rule for y_col(N+1)
    for (std::size_t row = 0; row < p.P.rows; ++row) {
        SysRat qc = p.Q.at(row, col);
        if (!qc.is_zero()) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col || deps_at_n[j].is_zero()) continue;
                p.Q.at(row, j) += qc * deps_at_n[j];
            }
            p.c[row] = rhs_add(p.c[row], rhs_scale(bpart_at_n, -qc));
            p.Q.at(row, col) = SysRat(0);
        }
        SysRat pc = p.P.at(row, col);
        if (!pc.is_zero()) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                SysRat d = shift_if(deps_at_n[j], kind, 1);
                if (d.is_zero()) continue;
                p.P.at(row, j) += pc * d;
            }
            p.c[row] = rhs_add(p.c[row], rhs_scale(rhs_shift_if(bpart_at_n, kind, 1), -pc));
            p.P.at(row, col) = SysRat(0);
        }
    }

    // drop the column
    auto drop_col = [&](Matrix<SysRat>& mtx) {
        Matrix<SysRat> out(mtx.rows, mtx.cols - 1);
        for (std::size_t i = 0; i < mtx.rows; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < mtx.cols; ++j) {
                if (j == col) continue;
                out.at(i, jj++) = mtx.at(i, j);
            }
        }
        mtx = out;
    };
    drop_col(p.P);
    drop_col(p.Q);
    p.ids.erase(p.ids.begin() + static_cast<long>(col));
    rules.push_back(std::move(rule));
}

void drop_row(Pencil& p, std::size_t row) {
    auto drop = [&](Matrix<SysRat>& mtx) {
        Matrix<SysRat> out(mtx.rows - 1, mtx.cols);
        std::size_t ii = 0;
        for (std::size_t i = 0; i < mtx.rows; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0; j < mtx.cols; ++j) out.at(ii, j) = mtx.at(i, j);
            ++ii;
        }
        mtx = out;
    };
    drop(p.P);
    drop(p.Q);
    p.c.erase(p.c.begin() + static_cast<long>(row));
}

std::size_t pick_pivot(const std::vector<SysRat>& v) {
    std::size_t best = v.size();
    long best_w = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        long w = pivot_weight(v[j]);
        if (best == v.size() || w < best_w) {
            best = j;
            best_w = w;
        }
    }
    return best;
}

}  // namespace

RegularizeResult regularize(const CoupledSystem& sys) {
    if (sys.order() > 1) throw Error("regularize: expected a first-order system");
    const std::size_t r0 = sys.dim();
    Pencil p;
    p.Q = sys.mats[0];
    p.P = sys.order() >= 1 ? sys.mats[1] : Matrix<SysRat>(r0, r0);
    p.c = sys.rhs;
    p.ids.resize(r0);
    for (std::size_t i = 0; i < r0; ++i) p.ids[i] = i;

    RegularizeResult out;
    std::vector<LinearRule> rules;

    while (p.ids.size() > 0) {
        std::size_t n = p.ids.size();
        // stage 1: make P invertible
        if (auto v = left_null_vector(p.P)) {
            // constraint: (v Q) y(N) = v c
            std::vector<SysRat> vq = row_times_matrix(*v, p.Q);
            RhsComb vc;
            for (std::size_t i = 0; i < n; ++i)
                if (!(*v)[i].is_zero()) vc = rhs_add(vc, rhs_scale(p.c[i], (*v)[i]));
            std::size_t piv = pick_pivot(vq);
            if (piv == vq.size()) {
                if (vc.empty())
                    throw DegenerateSystem("regularize: rank-deficient pencil (underdetermined)");
                throw DegenerateSystem("regularize: inconsistent relation 0 = " +
                                       rhs_comb_str(vc, {}));
            }
            // y_piv(N) = (vc - sum_{j != piv} vq_j y_j(N)) / vq_piv
            std::vector<SysRat> deps(n, SysRat(0));
            SysRat inv = SysRat(1) / vq[piv];
            for (std::size_t j = 0; j < n; ++j)
                if (j != piv) deps[j] = -vq[j] * inv;
            RhsComb bpart = rhs_scale(vc, inv);
            // one row with nonzero v weight becomes implied; drop it first
            std::size_t dead = 0;
            while (dead < n && (*v)[dead].is_zero()) ++dead;
            drop_row(p, dead);
            substitute_out(p, sys.kind, piv, deps, bpart, rules);
            out.changed = true;
            continue;
        }
        // P invertible: normalize to explicit form y(N+1) = A y(N) + b
        auto pinv = inverse(p.P);
        Matrix<SysRat> A = pinv->scaled(SysRat(-1)) * p.Q;
        std::vector<RhsComb> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            RhsComb acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!pinv->at(i, k).is_zero()) acc = rhs_add(acc, rhs_scale(p.c[k], pinv->at(i, k)));
            b[i] = std::move(acc);
        }
        p.P = Matrix<SysRat>::identity(n);
        p.Q = A.scaled(SysRat(-1));
        p.c = std::move(b);

        auto u = left_null_vector(A);
        if (!u) break;  // A invertible: done
        // u y(N+1) = u b  ->  at argument N: sum u_j(N-1) y_j(N) = (u b)(N-1)
        std::vector<SysRat> uq(n, SysRat(0));
        RhsComb ub;
        for (std::size_t j = 0; j < n; ++j) uq[j] = shift_if((*u)[j], sys.kind, -1);
        for (std::size_t i = 0; i < n; ++i)
            if (!(*u)[i].is_zero()) ub = rhs_add(ub, rhs_scale(p.c[i], (*u)[i]));
        ub = rhs_shift_if(ub, sys.kind, -1);
        std::size_t piv = pick_pivot(uq);
        if (piv == uq.size())
            throw DegenerateSystem("regularize: null relation without unknowns");
        std::vector<SysRat> deps(n, SysRat(0));
        SysRat inv = SysRat(1) / uq[piv];
        for (std::size_t j = 0; j < n; ++j)
            if (j != piv) deps[j] = -uq[j] * inv;
        RhsComb bpart = rhs_scale(ub, inv);
        // the defining row of y_piv becomes implied once the rule is applied
        drop_row(p, piv);
        substitute_out(p, sys.kind, piv, deps, bpart, rules);
        out.changed = true;
    }

    out.sys.kind = sys.kind;
    std::size_t n = p.ids.size();
    if (n > 0) {
        out.sys.mats = {p.Q, p.P};
        out.sys.rhs = p.c;
    }
    out.survivors = p.ids;
    out.rules = std::move(rules);
    return out;
}

std::string coupled_str(const CoupledSystem& sys, const std::vector<std::string>& unknown_names,
                        const std::vector<std::string>& rhs_names) {
    std::ostringstream os;
    auto name = [&](std::size_t i) {
        return i < unknown_names.size() ? unknown_names[i] : "I" + std::to_string(i + 1);
    };
    const char* sigma = sys.kind == OreKind::Shift ? "[N+" : "D^";
    for (std::size_t row = 0; row < sys.dim(); ++row) {
        bool first = true;
        for (long l = 0; l <= sys.order(); ++l) {
            for (std::size_t i = 0; i < sys.dim(); ++i) {
                const SysRat& c = sys.mats[static_cast<std::size_t>(l)].at(row, i);
                if (c.is_zero()) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << sysrat_str(c) << ")*" << name(i);
                if (sys.kind == OreKind::Shift)
                    os << sigma << l << "]";
                else if (l > 0)
                    os << "'" << (l > 1 ? "^" + std::to_string(l) : "");
            }
        }
        if (first) os << "0";
        os << " = " << rhs_comb_str(sys.rhs[row], rhs_names) << "\n";
    }
    return os.str();
}

}  // namespace oresolve
