#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oresolve/ratfun.hpp"

namespace oresolve {

class SumExpr;

// Hypergeometric product Prod_{k=lower}^{N} ratio(k); empty (= 1) for
// N < lower.  The ratio must have neither zeros nor poles at integers
// >= lower, checked on construction.
struct HypProduct {
    long lower;
    RatFunV ratio;

    HypProduct(long l, RatFunV h);
    Value eval(long n) const;
    int cmp(const HypProduct& o) const;
};

// Nested harmonic-type sum in canonical form: all weights positive, signs
// carried by the letters.  S_{w1,...}(x1,...; N) =
//   sum_{k=1}^{N} x1^k / k^w1 * S_{w2,...}(x2,...; k),  S_{}() = 1.
// The classic signed-index convention S_{-2}(N) = sum (-1)^k/k^2 maps to
// weight 2 with letter -1.
struct HarmonicSum {
    std::vector<long> weights;   // all > 0
    std::vector<Value> letters;  // same length, all nonzero

    HarmonicSum() = default;
    // signed-index constructor; letters default to 1
    static HarmonicSum make(const std::vector<long>& signed_weights,
                            const std::vector<Value>& letters = {});

    std::size_t depth() const { return weights.size(); }
    bool trivial() const { return weights.empty(); }
    // word with the outermost slot removed
    HarmonicSum tail() const;
    // prepend an outermost slot (weight w > 0, letter x != 0)
    HarmonicSum prepended(long w, const Value& x) const;

    Value eval(long n) const;
    int cmp(const HarmonicSum& o) const;
    bool operator==(const HarmonicSum& o) const { return cmp(o) == 0; }
};

// Sum_{k=lower}^{N} summand(k); the summand is a SumExpr in the inner index
// and free of N.  Empty (= 0) for N < lower.
struct NestedSum {
    long lower;
    std::shared_ptr<const SumExpr> summand;

    Value eval(long n) const;
    int cmp(const NestedSum& o) const;
};

// One product term: rat(N) * root^N * prods * harms * sums.  The rational
// part carries the scalar coefficient.
struct Term {
    RatFunV rat{Value(1)};
    Value root{1};  // nonzero
    std::vector<HypProduct> prods;
    std::vector<HarmonicSum> harms;
    std::vector<NestedSum> sums;

    bool factor_free() const { return root.is_one() && prods.empty() && harms.empty() && sums.empty(); }
    Value eval(long n) const;
    // comparison key ignoring the rational part (terms with equal keys merge)
    int key_cmp(const Term& o) const;
};

// Finite sum of terms; the closed-form expression class of the engine.
// Immutable value type, safe to share across threads.
class SumExpr {
  public:
    SumExpr() = default;  // zero

    static SumExpr zero() { return SumExpr(); }
    static SumExpr one() { return constant(Value(1)); }
    static SumExpr constant(const Value& v);
    static SumExpr rational(RatFunV r);
    static SumExpr harmonic(HarmonicSum h);
    static SumExpr root_power(const Value& base);
    static SumExpr product(HypProduct p);
    static SumExpr nested(NestedSum s);
    static SumExpr from_term(Term t);
    static SumExpr from_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // constant iff a single factor-free constant term (or empty)
    std::optional<Value> as_constant() const;
    std::optional<RatFunV> as_rational() const;

    SumExpr operator-() const;
    friend SumExpr operator+(const SumExpr& a, const SumExpr& b);
    friend SumExpr operator-(const SumExpr& a, const SumExpr& b);
    friend SumExpr operator*(const SumExpr& a, const SumExpr& b);
    SumExpr& operator+=(const SumExpr& o) { return *this = *this + o; }
    SumExpr& operator-=(const SumExpr& o) { return *this = *this - o; }
    SumExpr& operator*=(const SumExpr& o) { return *this = *this * o; }

    SumExpr scaled(const Value& v) const;
    SumExpr scaled(const RatFunV& r) const;

    // exact value at integer n (n >= offset()); throws EvalPole on a
    // vanishing denominator
    Value eval(long n) const;

    // smallest n from which every denominator is safe
    long offset() const;

    // sorted, merged canonical form
    SumExpr normalized() const;

    int cmp(const SumExpr& o) const;
    bool operator==(const SumExpr& o) const { return cmp(o) == 0; }

    std::size_t bit_size() const;
    std::string str() const;

  private:
    std::vector<Term> terms_;
};

// Structural-plus-sampling equality: normalized difference is zero, or
// evaluates to zero at `samples` consecutive integers (probabilistic check,
// the documented equality notion for this expression class).
bool equivalent(const SumExpr& a, const SumExpr& b, int samples = 21);

SumExpr parse_sumexpr(const std::string& input);

// Rational function of one index variable with Sqrt[] values allowed.
RatFunV parse_ratfun_v(const std::string& input, const std::string& var);

std::string sumexpr_str(const SumExpr& e);

}  // namespace oresolve
