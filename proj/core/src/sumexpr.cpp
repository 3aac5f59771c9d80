#include "oresolve/sumexpr.hpp"

#include <algorithm>
#include <sstream>

#include "oresolve/errors.hpp"
#include "oresolve/factor.hpp"
#include "oresolve/parse.hpp"

namespace oresolve {

namespace {
std::string index_name(int depth) {
    if (depth == 0) return "N";
    if (depth == 1) return "k";
    return "k" + std::to_string(depth);
}
}  // namespace

// ---------------------------------------------------------------- HypProduct

HypProduct::HypProduct(long l, RatFunV h) : lower(l), ratio(std::move(h)) {
    if (ratio.is_zero()) throw Error("HypProduct: zero ratio");
    for (long r : integer_roots(ratio.num()))
        if (r >= lower)
            throw Error("HypProduct: ratio vanishes at k=" + std::to_string(r) +
                        " inside the product range");
    for (long r : integer_roots(ratio.den()))
        if (r >= lower)
            throw Error("HypProduct: ratio has a pole at k=" + std::to_string(r) +
                        " inside the product range");
}

Value HypProduct::eval(long n) const {
    Value acc(1);
    for (long k = lower; k <= n; ++k) acc *= ratio.eval(Value(k));
    return acc;
}

int HypProduct::cmp(const HypProduct& o) const {
    if (lower != o.lower) return lower < o.lower ? -1 : 1;
    return ratio.cmp(o.ratio);
}

// --------------------------------------------------------------- HarmonicSum

HarmonicSum HarmonicSum::make(const std::vector<long>& signed_weights,
                              const std::vector<Value>& letters) {
    HarmonicSum h;
    for (std::size_t i = 0; i < signed_weights.size(); ++i) {
        long w = signed_weights[i];
        if (w == 0) throw Error("HarmonicSum: zero weight");
        Value x = i < letters.size() ? letters[i] : Value(1);
        if (x.is_zero()) throw Error("HarmonicSum: zero letter");
        if (w < 0) {
            w = -w;
            x = -x;
        }
        h.weights.push_back(w);
        h.letters.push_back(x);
    }
    return h;
}

HarmonicSum HarmonicSum::tail() const {
    HarmonicSum t;
    t.weights.assign(weights.begin() + 1, weights.end());
    t.letters.assign(letters.begin() + 1, letters.end());
    return t;
}

HarmonicSum HarmonicSum::prepended(long w, const Value& x) const {
    if (w <= 0 || x.is_zero()) throw Error("HarmonicSum: bad slot");
    HarmonicSum t;
    t.weights.reserve(weights.size() + 1);
    t.letters.reserve(letters.size() + 1);
    t.weights.push_back(w);
    t.letters.push_back(x);
    t.weights.insert(t.weights.end(), weights.begin(), weights.end());
    t.letters.insert(t.letters.end(), letters.begin(), letters.end());
    return t;
}

Value HarmonicSum::eval(long n) const {
    if (weights.empty()) return Value(1);
    if (n <= 0) return Value(0);
    std::vector<Value> cur(static_cast<std::size_t>(n) + 1, Value(1));
    for (std::size_t lvl = weights.size(); lvl-- > 0;) {
        std::vector<Value> next(static_cast<std::size_t>(n) + 1, Value(0));
        Value xp(1);
        for (long k = 1; k <= n; ++k) {
            xp *= letters[lvl];
            next[k] = next[k - 1] + xp / Value(k).pow(weights[lvl]) * cur[k];
        }
        cur = std::move(next);
    }
    return cur[static_cast<std::size_t>(n)];
}

int HarmonicSum::cmp(const HarmonicSum& o) const {
    if (weights.size() != o.weights.size()) return weights.size() < o.weights.size() ? -1 : 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] != o.weights[i]) return weights[i] < o.weights[i] ? -1 : 1;
        int c = letters[i].cmp(o.letters[i]);
        if (c != 0) return c;
    }
    return 0;
}

// ----------------------------------------------------------------- NestedSum

Value NestedSum::eval(long n) const {
    Value acc(0);
    for (long k = lower; k <= n; ++k) acc += summand->eval(k);
    return acc;
}

int NestedSum::cmp(const NestedSum& o) const {
    if (lower != o.lower) return lower < o.lower ? -1 : 1;
    return summand->cmp(*o.summand);
}

// ---------------------------------------------------------------------- Term

Value Term::eval(long n) const {
    Value acc = rat.eval(Value(n));
    if (!root.is_one()) acc *= root.pow(n);
    for (const auto& p : prods) acc *= p.eval(n);
    for (const auto& h : harms) acc *= h.eval(n);
    for (const auto& s : sums) acc *= s.eval(n);
    return acc;
}

int Term::key_cmp(const Term& o) const {
    int c = root.cmp(o.root);
    if (c != 0) return c;
    auto list_cmp = [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int r = a[i].cmp(b[i]);
            if (r != 0) return r;
        }
        return 0;
    };
    c = list_cmp(harms, o.harms);
    if (c != 0) return c;
    c = list_cmp(prods, o.prods);
    if (c != 0) return c;
    return list_cmp(sums, o.sums);
}

// ------------------------------------------------------------------- SumExpr

SumExpr SumExpr::constant(const Value& v) { return rational(RatFunV(v)); }

SumExpr SumExpr::rational(RatFunV r) {
    Term t;
    t.rat = std::move(r);
    return from_term(std::move(t));
}

SumExpr SumExpr::harmonic(HarmonicSum h) {
    Term t;
    if (!h.trivial()) t.harms.push_back(std::move(h));
    return from_term(std::move(t));
}

SumExpr SumExpr::root_power(const Value& base) {
    if (base.is_zero()) throw Error("SumExpr: zero root-power base");
    Term t;
    t.root = base;
    return from_term(std::move(t));
}

SumExpr SumExpr::product(HypProduct p) {
    Term t;
    t.prods.push_back(std::move(p));
    return from_term(std::move(t));
}

SumExpr SumExpr::nested(NestedSum s) {
    Term t;
    t.sums.push_back(std::move(s));
    return from_term(std::move(t));
}

SumExpr SumExpr::from_term(Term t) {
    SumExpr e;
    if (!t.rat.is_zero()) e.terms_.push_back(std::move(t));
    return e;
}

SumExpr SumExpr::from_terms(std::vector<Term> ts) {
    SumExpr e;
    for (auto& t : ts)
        if (!t.rat.is_zero()) e.terms_.push_back(std::move(t));
    return e.normalized();
}

std::optional<Value> SumExpr::as_constant() const {
    if (terms_.empty()) return Value(0);
    if (terms_.size() != 1) return std::nullopt;
    const Term& t = terms_[0];
    if (!t.factor_free() || !t.rat.is_constant()) return std::nullopt;
    return t.rat.constant_value();
}

std::optional<RatFunV> SumExpr::as_rational() const {
    if (terms_.empty()) return RatFunV(Value(0));
    if (terms_.size() != 1) return std::nullopt;
    const Term& t = terms_[0];
    if (!t.factor_free()) return std::nullopt;
    return t.rat;
}

SumExpr SumExpr::operator-() const {
    SumExpr e = *this;
    for (auto& t : e.terms_) t.rat = -t.rat;
    return e;
}

SumExpr operator+(const SumExpr& a, const SumExpr& b) {
    SumExpr e;
    e.terms_ = a.terms_;
    e.terms_.insert(e.terms_.end(), b.terms_.begin(), b.terms_.end());
    return e.normalized();
}

SumExpr operator-(const SumExpr& a, const SumExpr& b) { return a + (-b); }

SumExpr operator*(const SumExpr& a, const SumExpr& b) {
    SumExpr e;
    for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
            Term t;
            t.rat = ta.rat * tb.rat;
            if (t.rat.is_zero()) continue;
            t.root = ta.root * tb.root;
            t.prods = ta.prods;
            t.prods.insert(t.prods.end(), tb.prods.begin(), tb.prods.end());
            t.harms = ta.harms;
            t.harms.insert(t.harms.end(), tb.harms.begin(), tb.harms.end());
            t.sums = ta.sums;
            t.sums.insert(t.sums.end(), tb.sums.begin(), tb.sums.end());
            e.terms_.push_back(std::move(t));
        }
    }
    return e.normalized();
}

SumExpr SumExpr::scaled(const Value& v) const { return scaled(RatFunV(v)); }

SumExpr SumExpr::scaled(const RatFunV& r) const {
    if (r.is_zero()) return SumExpr();
    SumExpr e = *this;
    for (auto& t : e.terms_) t.rat *= r;
    return e.normalized();
}

Value SumExpr::eval(long n) const {
    Value acc(0);
    for (const auto& t : terms_) acc += t.eval(n);
    return acc;
}

long SumExpr::offset() const {
    long off = 0;
    for (const auto& t : terms_) {
        for (long r : integer_roots(t.rat.den()))
            if (r + 1 > off) off = r + 1;
    }
    return off;
}

SumExpr SumExpr::normalized() const {
    std::vector<Term> out;
    for (const Term& t0 : terms_) {
        if (t0.rat.is_zero()) continue;
        Term t;
        t.rat = t0.rat;
        t.root = t0.root;
        bool zero = false;
        for (const auto& s : t0.sums) {
            SumExpr inner = s.summand->normalized();
            if (inner.is_zero()) {
                zero = true;  // a factor sum of zero
                break;
            }
            t.sums.push_back(NestedSum{s.lower, std::make_shared<const SumExpr>(std::move(inner))});
        }
        if (zero) continue;
        for (const auto& p : t0.prods) {
            if (p.ratio.is_constant()) {
                Value c = p.ratio.constant_value();
                if (c.is_one()) continue;
                if (p.lower <= 1) {
                    // prod_{k=l}^{N} c = c^(1-l) * c^N, valid from N >= l-1
                    t.root *= c;
                    t.rat *= RatFunV(c.pow(1 - p.lower));
                    continue;
                }
            }
            t.prods.push_back(p);
        }
        for (const auto& h : t0.harms)
            if (!h.trivial()) t.harms.push_back(h);
        auto by_cmp = [](const auto& a, const auto& b) { return a.cmp(b) < 0; };
        std::sort(t.prods.begin(), t.prods.end(), by_cmp);
        std::sort(t.harms.begin(), t.harms.end(), by_cmp);
        std::sort(t.sums.begin(), t.sums.end(), by_cmp);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.key_cmp(b) < 0; });
    std::vector<Term> merged;
    for (auto& t : out) {
        if (!merged.empty() && merged.back().key_cmp(t) == 0) {
            merged.back().rat += t.rat;
            if (merged.back().rat.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    SumExpr e;
    e.terms_ = std::move(merged);
    return e;
}

int SumExpr::cmp(const SumExpr& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        int c = terms_[i].key_cmp(o.terms_[i]);
        if (c != 0) return c;
        c = terms_[i].rat.cmp(o.terms_[i].rat);
        if (c != 0) return c;
    }
    return 0;
}

std::size_t SumExpr::bit_size() const {
    std::size_t n = 0;
    for (const auto& t : terms_) {
        n += t.rat.bit_size() + t.root.bit_size();
        for (const auto& p : t.prods) n += p.ratio.bit_size();
        for (const auto& h : t.harms) {
            n += h.weights.size() * 8;
            for (const auto& x : h.letters) n += x.bit_size();
        }
        for (const auto& s : t.sums) n += s.summand->bit_size();
    }
    return n;
}

bool equivalent(const SumExpr& a, const SumExpr& b, int samples) {
    SumExpr d = (a - b).normalized();
    if (d.is_zero()) return true;
    long start = d.offset();
    for (int i = 0; i < samples; ++i) {
        if (!d.eval(start + i).is_zero()) return false;
    }
    return true;
}

// ------------------------------------------------------------------ printing

namespace {

std::string harm_str(const HarmonicSum& h, const std::string& arg) {
    std::ostringstream os;
    bool plain = true;
    for (const auto& x : h.letters)
        if (!(x.is_one() || (-x).is_one())) plain = false;
    os << "S[";
    if (plain) {
        for (std::size_t i = 0; i < h.weights.size(); ++i) {
            if (i) os << ",";
            os << ((-h.letters[i]).is_one() ? -h.weights[i] : h.weights[i]);
        }
    } else {
        os << "{";
        for (std::size_t i = 0; i < h.weights.size(); ++i) {
            if (i) os << ",";
            os << h.weights[i];
        }
        os << "},{";
        for (std::size_t i = 0; i < h.letters.size(); ++i) {
            if (i) os << ",";
            os << h.letters[i].str();
        }
        os << "}";
    }
    os << "](" << arg << ")";
    return os.str();
}

std::string sumexpr_str_depth(const SumExpr& e, int depth);

std::string term_str(const Term& t, int depth) {
    const std::string arg = index_name(depth);
    std::vector<std::string> factors;
    if (!t.root.is_one()) factors.push_back("Pow(" + t.root.str() + "," + arg + ")");
    for (const auto& p : t.prods)
        factors.push_back("Prod[" + std::to_string(p.lower) + "," +
                          ratfun_str_named(p.ratio, index_name(depth + 1)) + "](" + arg + ")");
    for (const auto& h : t.harms) factors.push_back(harm_str(h, arg));
    for (const auto& s : t.sums)
        factors.push_back("Sum[" + std::to_string(s.lower) + "," +
                          sumexpr_str_depth(*s.summand, depth + 1) + "](" + arg + ")");

    std::ostringstream os;
    bool need_star = false;
    if (factors.empty()) {
        os << (t.rat.is_constant() ? t.rat.constant_value().str() : ratfun_str_named(t.rat, arg));
    } else if (t.rat.is_constant() && t.rat.constant_value().is_one()) {
        // omit the unit coefficient
    } else if (t.rat.is_constant() && (-t.rat.constant_value()).is_one()) {
        os << "-";
    } else if (t.rat.is_constant()) {
        os << t.rat.constant_value().str();
        need_star = true;
    } else if (t.rat.is_polynomial()) {
        os << "(" << ratfun_str_named(t.rat, arg) << ")";
        need_star = true;
    } else {
        os << ratfun_str_named(t.rat, arg);  // already (num)/(den)
        need_star = true;
    }
    for (const auto& f : factors) {
        if (need_star) os << "*";
        os << f;
        need_star = true;
    }
    return os.str();
}

std::string sumexpr_str_depth(const SumExpr& e, int depth) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms()) {
        std::string ts = term_str(t, depth);
        if (!first && !ts.empty() && ts[0] != '-') os << "+";
        os << ts;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string SumExpr::str() const { return sumexpr_str_depth(*this, 0); }

std::string sumexpr_str(const SumExpr& e) { return e.str(); }

// ------------------------------------------------------------------- parsing

namespace {

SumExpr eval_sum_ast(const Ast& a, int depth);

SumExpr sum_pow(const SumExpr& base, long e) {
    if (auto r = base.as_rational()) return SumExpr::rational(r->pow(e));
    if (e < 0) throw ParseError("negative power of a non-rational expression");
    SumExpr acc = SumExpr::one();
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

SumExpr eval_sum_call(const Ast& a, int depth) {
    const std::string arg_name = index_name(depth);
    auto check_arg = [&](const Ast& arg) {
        if (arg.kind != Ast::Kind::Symbol || arg.text != arg_name)
            throw ParseError("expected argument '" + arg_name + "'");
    };
    if (a.text == "Sqrt") {
        if (a.brackets.size() != 1) throw ParseError("Sqrt takes one bracket argument");
        return SumExpr::constant(Value::sqrt_of(ast_to_long(a.brackets[0])));
    }
    if (a.text == "S") {
        if (a.args.size() > 1) throw ParseError("S takes one argument");
        if (!a.args.empty()) check_arg(a.args[0]);
        std::vector<long> weights;
        std::vector<Value> letters;
        if (a.brackets.size() == 2 && a.brackets[0].kind == Ast::Kind::List) {
            if (a.brackets[1].kind != Ast::Kind::List)
                throw ParseError("S[{weights},{letters}] expected");
            for (const auto& w : a.brackets[0].args) weights.push_back(ast_to_long(w));
            for (const auto& x : a.brackets[1].args) letters.push_back(eval_value_ast(x));
            if (weights.size() != letters.size())
                throw ParseError("S: weights and letters differ in length");
        } else {
            for (const auto& w : a.brackets) weights.push_back(ast_to_long(w));
        }
        return SumExpr::harmonic(HarmonicSum::make(weights, letters));
    }
    if (a.text == "Pow") {
        if (a.args.size() != 2) throw ParseError("Pow(base, index) expected");
        check_arg(a.args[1]);
        return SumExpr::root_power(eval_value_ast(a.args[0]));
    }
    if (a.text == "Prod") {
        if (a.brackets.size() != 2 || a.args.size() != 1)
            throw ParseError("Prod[lower, ratio](index) expected");
        check_arg(a.args[0]);
        long lower = ast_to_long(a.brackets[0]);
        RatFunV ratio = eval_ratfun_v_ast(a.brackets[1], index_name(depth + 1));
        return SumExpr::product(HypProduct(lower, std::move(ratio)));
    }
    if (a.text == "Sum") {
        if (a.brackets.size() != 2 || a.args.size() != 1)
            throw ParseError("Sum[lower, summand](index) expected");
        check_arg(a.args[0]);
        long lower = ast_to_long(a.brackets[0]);
        SumExpr inner = eval_sum_ast(a.brackets[1], depth + 1);
        return SumExpr::nested(NestedSum{lower, std::make_shared<const SumExpr>(std::move(inner))});
    }
    throw ParseError("unknown call '" + a.text + "' in an expression");
}

SumExpr eval_sum_ast(const Ast& a, int depth) {
    switch (a.kind) {
        case Ast::Kind::Number:
            return SumExpr::constant(Value(Rational::from_string(a.text)));
        case Ast::Kind::Symbol:
            if (a.text == index_name(depth)) return SumExpr::rational(RatFunV::variable("N"));
            throw ParseError("unexpected symbol '" + a.text + "', expected '" + index_name(depth) +
                             "'");
        case Ast::Kind::Unary:
            return -eval_sum_ast(a.args[0], depth);
        case Ast::Kind::Binary: {
            if (a.text == "^") {
                SumExpr base = eval_sum_ast(a.args[0], depth);
                return sum_pow(base, ast_to_long(a.args[1]));
            }
            SumExpr l = eval_sum_ast(a.args[0], depth);
            SumExpr r = eval_sum_ast(a.args[1], depth);
            if (a.text == "+") return l + r;
            if (a.text == "-") return l - r;
            if (a.text == "*") return l * r;
            if (a.text == "/") {
                auto rr = r.as_rational();
                if (!rr || rr->is_zero())
                    throw ParseError("division is only defined by nonzero rational expressions");
                return l.scaled(rr->inverse());
            }
            throw ParseError("unknown operator " + a.text);
        }
        case Ast::Kind::Call:
            return eval_sum_call(a, depth);
        case Ast::Kind::List:
            throw ParseError("list not allowed here");
    }
    throw ParseError("bad AST");
}

}  // namespace

SumExpr parse_sumexpr(const std::string& input) {
    return eval_sum_ast(parse_ast(input), 0).normalized();
}

RatFunV parse_ratfun_v(const std::string& input, const std::string& var) {
    return eval_ratfun_v_ast(parse_ast(input), var);
}

}  // namespace oresolve
