#pragma once

#include <string>
#include <vector>

#include "oresolve/poly.hpp"
#include "oresolve/ratfun.hpp"

namespace oresolve {

// Expression syntax tree shared by every textual grammar in the project:
// numbers, `p/q`, + - * / ^, parentheses, symbols, and call forms
// Name[br1,...](a1,...) such as Sqrt[5], S[2,1](N), Pow(2,N), Sum[1,...](N).
struct Ast {
    enum class Kind { Number, Symbol, Unary, Binary, Call, List };
    Kind kind = Kind::Number;
    std::string text;             // literal, symbol name, operator, or call name
    std::vector<Ast> brackets;    // arguments inside [ ]
    std::vector<Ast> args;        // operands / arguments inside ( )
};

Ast parse_ast(const std::string& input);

// Typed readers over the shared syntax.
Value parse_value(const std::string& input);
// Rational function in a single variable over Q; any other symbol is an error.
RatFunQ parse_ratfun_q(const std::string& input, const std::string& var);
PolyQ parse_poly_q(const std::string& input, const std::string& var);
// Rational function in `var` whose coefficients live in Q(ep).
RatFun<EpsRat> parse_ratfun_eps(const std::string& input, const std::string& var);

// Canonical printers (round-trip with the readers above).
std::string poly_str(const PolyQ& p);
std::string poly_str(const PolyV& p);
std::string poly_str(const Poly<EpsRat>& p);
std::string ratfun_str(const RatFunQ& r);
std::string ratfun_str(const RatFunV& r);
std::string ratfun_str(const RatFun<EpsRat>& r);
// Print with the variable renamed (the expression grammar names indices by
// nesting depth).
std::string ratfun_str_named(const RatFunV& r, const std::string& var);

// AST-level readers shared with the expression grammar.
long ast_to_long(const Ast& a);
Value eval_value_ast(const Ast& a);
RatFunV eval_ratfun_v_ast(const Ast& a, const std::string& var);

}  // namespace oresolve
