#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "oresolve/errors.hpp"
#include "oresolve/rational.hpp"
#include "oresolve/value.hpp"

namespace oresolve {

// Deterministic total orders used for canonical term sorting.  Found by
// argument-dependent lookup from the templates below.
inline int scalar_cmp(const Rational& a, const Rational& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}
inline int scalar_cmp(const Value& a, const Value& b) { return a.cmp(b); }

// Dense univariate polynomial over a field K, coefficients ascending.
// The variable is a name tag: binary operations require matching names,
// where constants (degree <= 0) unify with any variable.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(K c) { coeffs_.push_back(std::move(c)); normalize(); }  // NOLINT
    Poly(long c) : Poly(K(c)) {}                                 // NOLINT
    Poly(std::string var, std::vector<K> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    // The monomial c * v^e.
    static Poly monomial(std::string var, K c, std::size_t e) {
        std::vector<K> cs(e + 1, K(0));
        cs[e] = std::move(c);
        return Poly(std::move(var), std::move(cs));
    }
    static Poly variable(std::string var) { return monomial(std::move(var), K(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::string& var() const { return var_; }

    const K& lc() const {
        if (is_zero()) throw Error("Poly: leading coefficient of zero");
        return coeffs_.back();
    }
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
    const std::vector<K>& coeffs() const { return coeffs_; }
    K constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::string v = join_vars(a, b);
        std::vector<K> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v), std::move(cs));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        std::string v = join_vars(a, b);
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> cs(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v), std::move(cs));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(*this);
        for (auto& x : r.coeffs_) x = x * c;
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return a.is_constant() || b.is_constant() || a.var_ == b.var_ || a.var_.empty() ||
               b.var_.empty();
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient and remainder; K must be a field
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("Poly: division by zero polynomial");
        std::string v = join_vars(a, b);
        Poly q, r = a;
        q.var_ = v;
        std::vector<K> qc(a.coeffs_.size() > b.coeffs_.size() ? a.coeffs_.size() - b.coeffs_.size() + 1 : 1,
                          K(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K c = r.lc() / b.lc();
            std::size_t e = static_cast<std::size_t>(r.degree() - b.degree());
            qc[e] = c;
            r -= Poly::monomial(v, c, e) * b;
        }
        q = Poly(v, std::move(qc));
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    // exact division; throws if the remainder is nonzero
    Poly exact_div(const Poly& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) throw Error("Poly: inexact division");
        return q;
    }

    bool divides(const Poly& a) const { return is_zero() ? a.is_zero() : (a % *this).is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / lc());
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly(var_, {});
        std::vector<K> cs(coeffs_.size() - 1, K(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * K(static_cast<long>(i));
        return Poly(var_, std::move(cs));
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // substitute the variable by another polynomial (Horner composition)
    Poly compose(const Poly& inner) const {
        Poly acc(inner.var_, {});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    // p(v + j) for an integer shift j
    Poly shifted(long j) const {
        if (j == 0 || is_constant()) return *this;
        Poly inner = Poly::variable(var_) + Poly(K(j));
        return compose(inner);
    }

    Poly pow(std::size_t e) const {
        Poly acc(K(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    int cmp(const Poly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            int c = scalar_cmp(coeffs_[i], o.coeffs_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::size_t bit_size() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += c.bit_size();
        return n;
    }

  private:
    static std::string join_vars(const Poly& a, const Poly& b) {
        bool a_free = a.is_constant() || a.var_.empty();
        bool b_free = b.is_constant() || b.var_.empty();
        if (a_free) return a.var_.empty() || !b.var_.empty() ? b.var_ : a.var_;
        if (b_free) return a.var_;
        if (a.var_ != b.var_) throw Error("Poly: variable mismatch '" + a.var_ + "' vs '" + b.var_ + "'");
        return a.var_;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::string var_;
    std::vector<K> coeffs_;
};

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return (a * b).exact_div(poly_gcd(a, b)).monic();
}

using PolyQ = Poly<Rational>;
using PolyV = Poly<Value>;

inline PolyV to_value_poly(const PolyQ& p) {
    std::vector<Value> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.emplace_back(c);
    return PolyV(p.var(), std::move(cs));
}

}  // namespace oresolve
