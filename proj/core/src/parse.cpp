#include "oresolve/parse.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "oresolve/errors.hpp"

namespace oresolve {

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    void expect(const std::string& op) {
        if (tok_.kind != Token::Kind::Op || tok_.text != op)
            throw ParseError("expected '" + op + "' near '" + tok_.text + "' in '" + s_ + "'");
        advance();
    }

    bool accept(const std::string& op) {
        if (tok_.kind == Token::Kind::Op && tok_.text == op) {
            advance();
            return true;
        }
        return false;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Kind::Number, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        static const std::string ops = "+-*/^()[]{},";
        if (ops.find(c) != std::string::npos) {
            tok_ = {Token::Kind::Op, std::string(1, c)};
            ++pos_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    Ast parse() {
        Ast e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("trailing input at '" + lex_.peek().text + "'");
        return e;
    }

  private:
    Ast expr() {
        Ast left = term();
        while (true) {
            if (lex_.accept("+")) {
                left = binary("+", std::move(left), term());
            } else if (lex_.accept("-")) {
                left = binary("-", std::move(left), term());
            } else {
                return left;
            }
        }
    }

    Ast term() {
        Ast left = unary();
        while (true) {
            if (lex_.accept("*")) {
                left = binary("*", std::move(left), unary());
            } else if (lex_.accept("/")) {
                left = binary("/", std::move(left), unary());
            } else {
                return left;
            }
        }
    }

    Ast unary() {
        if (lex_.accept("-")) {
            Ast a;
            a.kind = Ast::Kind::Unary;
            a.text = "-";
            a.args.push_back(unary());
            return a;
        }
        return power();
    }

    Ast power() {
        Ast base = atom();
        if (lex_.accept("^")) {
            // right associative
            Ast e;
            if (lex_.accept("-")) {
                e.kind = Ast::Kind::Unary;
                e.text = "-";
                e.args.push_back(power_exponent());
            } else {
                e = power_exponent();
            }
            return binary("^", std::move(base), std::move(e));
        }
        return base;
    }

    Ast power_exponent() {
        // an exponent is an atom (number, symbol, or parenthesized expression)
        // optionally raised again
        Ast base = atom();
        if (lex_.accept("^")) return binary("^", std::move(base), power_exponent());
        return base;
    }

    Ast atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Ast a;
            a.kind = Ast::Kind::Number;
            a.text = lex_.next().text;
            return a;
        }
        if (t.kind == Token::Kind::Ident) {
            Ast a;
            a.text = lex_.next().text;
            a.kind = Ast::Kind::Symbol;
            bool is_call = false;
            if (lex_.accept("[")) {
                is_call = true;
                if (!lex_.accept("]")) {
                    do a.brackets.push_back(bracket_item());
                    while (lex_.accept(","));
                    lex_.expect("]");
                }
            }
            if (lex_.peek().kind == Token::Kind::Op && lex_.peek().text == "(" && (is_call || is_known_call(a.text))) {
                lex_.expect("(");
                is_call = true;
                if (!lex_.accept(")")) {
                    do a.args.push_back(expr());
                    while (lex_.accept(","));
                    lex_.expect(")");
                }
            }
            if (is_call) a.kind = Ast::Kind::Call;
            return a;
        }
        if (lex_.accept("(")) {
            Ast e = expr();
            lex_.expect(")");
            return e;
        }
        throw ParseError("unexpected token '" + t.text + "'");
    }

    Ast bracket_item() {
        if (lex_.accept("{")) {
            Ast list;
            list.kind = Ast::Kind::List;
            if (!lex_.accept("}")) {
                do list.args.push_back(expr());
                while (lex_.accept(","));
                lex_.expect("}");
            }
            return list;
        }
        return expr();
    }

    // Names that take parenthesized arguments rather than being plain symbols
    // followed by multiplication-free grouping.
    static bool is_known_call(const std::string& name) { return name == "Pow"; }

    static Ast binary(const char* op, Ast l, Ast r) {
        Ast a;
        a.kind = Ast::Kind::Binary;
        a.text = op;
        a.args.push_back(std::move(l));
        a.args.push_back(std::move(r));
        return a;
    }

    Lexer lex_;
};

// Evaluate an AST in an arbitrary field-like algebra.  `sym` resolves plain
// symbols, `call` resolves call forms; both throw ParseError for unknowns.
template <class T>
T eval_ast(const Ast& a, const std::function<T(const std::string&)>& sym,
           const std::function<T(const Ast&)>& call) {
    switch (a.kind) {
        case Ast::Kind::Number:
            return T(Rational::from_string(a.text));
        case Ast::Kind::Symbol:
            return sym(a.text);
        case Ast::Kind::Unary:
            return -eval_ast(a.args[0], sym, call);
        case Ast::Kind::Binary: {
            if (a.text == "^") {
                T base = eval_ast(a.args[0], sym, call);
                return base.pow(ast_to_long(a.args[1]));
            }
            T l = eval_ast(a.args[0], sym, call);
            T r = eval_ast(a.args[1], sym, call);
            if (a.text == "+") return l + r;
            if (a.text == "-") return l - r;
            if (a.text == "*") return l * r;
            if (a.text == "/") return l / r;
            throw ParseError("unknown operator " + a.text);
        }
        case Ast::Kind::Call:
            return call(a);
        case Ast::Kind::List:
            throw ParseError("list not allowed here");
    }
    throw ParseError("bad AST");
}

Value value_call(const Ast& a) {
    if (a.text == "Sqrt") {
        if (a.brackets.size() != 1 || !a.args.empty()) throw ParseError("Sqrt takes one bracket argument");
        return Value::sqrt_of(ast_to_long(a.brackets[0]));
    }
    throw ParseError("unexpected call '" + a.text + "' in a scalar expression");
}

}  // namespace

long ast_to_long(const Ast& a) {
    if (a.kind == Ast::Kind::Number) return Rational::from_string(a.text).to_long();
    if (a.kind == Ast::Kind::Unary && a.text == "-") return -ast_to_long(a.args[0]);
    if (a.kind == Ast::Kind::Binary) {
        long l = ast_to_long(a.args[0]);
        long r = ast_to_long(a.args[1]);
        if (a.text == "+") return l + r;
        if (a.text == "-") return l - r;
        if (a.text == "*") return l * r;
    }
    throw ParseError("expected an integer expression");
}

Value eval_value_ast(const Ast& a) {
    std::function<Value(const std::string&)> sym = [](const std::string& s) -> Value {
        throw ParseError("unexpected symbol '" + s + "' in a scalar expression");
    };
    std::function<Value(const Ast&)> call = value_call;
    return eval_ast<Value>(a, sym, call);
}

RatFunV eval_ratfun_v_ast(const Ast& a, const std::string& var) {
    std::function<RatFunV(const std::string&)> sym = [&](const std::string& s) -> RatFunV {
        if (s == var) return RatFunV::variable("N");  // internal index name
        throw ParseError("unexpected symbol '" + s + "', expected '" + var + "'");
    };
    std::function<RatFunV(const Ast&)> call = [](const Ast& c) -> RatFunV {
        if (c.text == "Sqrt") return RatFunV(value_call(c));
        throw ParseError("unexpected call '" + c.text + "' in a rational function");
    };
    return eval_ast<RatFunV>(a, sym, call);
}

std::string ratfun_str_named(const RatFunV& r, const std::string& var) {
    PolyV num(var, r.num().coeffs());
    PolyV den(var, r.den().coeffs());
    return ratfun_str(RatFunV(num, den));
}

Ast parse_ast(const std::string& input) {
    return Parser(input).parse();
}

Value parse_value(const std::string& input) {
    Ast a = parse_ast(input);
    std::function<Value(const std::string&)> sym = [](const std::string& s) -> Value {
        throw ParseError("unexpected symbol '" + s + "' in a scalar expression");
    };
    std::function<Value(const Ast&)> call = value_call;
    return eval_ast<Value>(a, sym, call);
}

RatFunQ parse_ratfun_q(const std::string& input, const std::string& var) {
    Ast a = parse_ast(input);
    std::function<RatFunQ(const std::string&)> sym = [&](const std::string& s) -> RatFunQ {
        if (s == var) return RatFunQ::variable(var);
        throw ParseError("unexpected symbol '" + s + "', expected '" + var + "'");
    };
    std::function<RatFunQ(const Ast&)> call = [](const Ast& c) -> RatFunQ {
        throw ParseError("unexpected call '" + c.text + "' in a rational function");
    };
    return eval_ast<RatFunQ>(a, sym, call);
}

PolyQ parse_poly_q(const std::string& input, const std::string& var) {
    RatFunQ r = parse_ratfun_q(input, var);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial, got a proper quotient");
    return r.num();
}

RatFun<EpsRat> parse_ratfun_eps(const std::string& input, const std::string& var) {
    Ast a = parse_ast(input);
    std::function<RatFun<EpsRat>(const std::string&)> sym =
        [&](const std::string& s) -> RatFun<EpsRat> {
        if (s == var) return RatFun<EpsRat>::variable(var);
        if (s == "ep") return RatFun<EpsRat>(Poly<EpsRat>(EpsRat::variable("ep")));
        throw ParseError("unexpected symbol '" + s + "', expected '" + var + "' or 'ep'");
    };
    std::function<RatFun<EpsRat>(const Ast&)> call = [](const Ast& c) -> RatFun<EpsRat> {
        throw ParseError("unexpected call '" + c.text + "' in a rational function");
    };
    return eval_ast<RatFun<EpsRat>>(a, sym, call);
}

namespace {

std::string scalar_str(const Rational& r) { return r.str(); }
std::string scalar_str(const Value& v) { return v.str(); }
std::string scalar_str(const EpsRat& r);

// True when the printed scalar needs no parentheses before "*var^e":
// a bare integer, or p/q (which binds like division).
bool scalar_is_simple(const Rational&) { return true; }
// surd values print as (p+q*Sqrt[d])/c which already binds tighter than '*'
bool scalar_is_simple(const Value&) { return true; }

// c*ep^k monomials and (num)/(den) quotients need no extra parentheses
bool eps_is_monomial(const EpsRat& r) {
    if (!r.is_polynomial()) return false;
    int nonzero = 0;
    for (const auto& c : r.num().coeffs())
        if (!c.is_zero()) ++nonzero;
    return nonzero <= 1;
}
bool scalar_is_simple(const EpsRat& r) { return !r.is_polynomial() || eps_is_monomial(r); }

bool scalar_is_negative_literal(const Rational& r) { return r.sign() < 0; }
bool scalar_is_negative_literal(const Value& v) { return v.is_rational() && v.rational_part().sign() < 0; }
bool scalar_is_negative_literal(const EpsRat& r) {
    return eps_is_monomial(r) && !r.is_zero() && r.num().lc().sign() < 0;
}

template <class K>
K scalar_negated(const K& k) { return -k; }

template <class K>
std::string poly_str_impl(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const std::string v = p.var().empty() ? "x" : p.var();
    std::ostringstream os;
    bool first = true;
    for (long e = p.degree(); e >= 0; --e) {
        K c = p.coeff(static_cast<std::size_t>(e));
        if (c.is_zero()) continue;
        bool neg = scalar_is_negative_literal(c);
        if (first) {
            if (neg) {
                os << "-";
                c = scalar_negated(c);
            }
            first = false;
        } else {
            os << (neg ? "-" : "+");
            if (neg) c = scalar_negated(c);
        }
        bool unit = c.is_one();
        if (e == 0) {
            std::string cs = scalar_str(c);
            if (!scalar_is_simple(c)) cs = "(" + cs + ")";
            os << cs;
        } else {
            if (!unit) {
                std::string cs = scalar_str(c);
                if (!scalar_is_simple(c)) cs = "(" + cs + ")";
                os << cs << "*";
            }
            os << v;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

template <class K>
std::string ratfun_str_impl(const RatFun<K>& r) {
    if (r.is_polynomial()) return poly_str_impl(r.num());
    std::string n = poly_str_impl(r.num());
    std::string d = poly_str_impl(r.den());
    return "(" + n + ")/(" + d + ")";
}

std::string scalar_str(const EpsRat& r) { return ratfun_str_impl(r); }

}  // namespace

std::string poly_str(const PolyQ& p) { return poly_str_impl(p); }
std::string poly_str(const PolyV& p) { return poly_str_impl(p); }
std::string poly_str(const Poly<EpsRat>& p) { return poly_str_impl(p); }
std::string ratfun_str(const RatFunQ& r) { return ratfun_str_impl(r); }
std::string ratfun_str(const RatFunV& r) { return ratfun_str_impl(r); }
std::string ratfun_str(const RatFun<EpsRat>& r) { return ratfun_str_impl(r); }

}  // namespace oresolve
