#pragma once

#include <optional>
#include <vector>

#include "oresolve/errors.hpp"
#include "oresolve/ratfun.hpp"

namespace oresolve {

// Pivot size heuristics: prefer small rational functions, as elimination on
// the wrong pivot inflates degrees quickly.
inline long pivot_weight(const Rational&) { return 0; }
inline long pivot_weight(const Value&) { return 0; }
template <class K>
long pivot_weight(const RatFun<K>& r) {
    return r.num().degree() + r.den().degree();
}

template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

    F& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw Error("Matrix: dimension mismatch");
        Matrix m(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols; ++j)
                    m.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return m;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, x.cols);
        for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
        return m;
    }

    Matrix scaled(const F& c) const {
        Matrix m = *this;
        for (auto& x : m.a) x = x * c;
        return m;
    }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
};

template <class F>
std::vector<F> row_times_matrix(const std::vector<F>& v, const Matrix<F>& m) {
    std::vector<F> out(m.cols, F(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

// Row echelon elimination with minimal-weight pivoting.  Returns the rank;
// `aug` columns ride along (augmented system).
template <class F>
std::size_t echelonize(Matrix<F>& m, std::size_t main_cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < main_cols && r < m.rows; ++c) {
        std::size_t best = m.rows;
        long best_w = 0;
        for (std::size_t i = r; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            long w = pivot_weight(m.at(i, c));
            if (best == m.rows || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == m.rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        F inv = F(1) / m.at(r, c);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            F f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// Solve A x = b; nullopt when inconsistent.  Free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& A, const std::vector<F>& b) {
    Matrix<F> m(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols) = b[i];
    }
    echelonize(m, A.cols);
    std::vector<F> x(A.cols, F(0));
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::size_t lead = A.cols + 1;
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (!m.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == A.cols + 1) {
            if (!m.at(i, A.cols).is_zero()) return std::nullopt;  // 0 = nonzero
            continue;
        }
        x[lead] = m.at(i, A.cols);
    }
    return x;
}

// Basis of the right nullspace of A.
template <class F>
std::vector<std::vector<F>> nullspace_basis(const Matrix<F>& A) {
    Matrix<F> m = A;
    echelonize(m, A.cols);
    std::vector<long> lead_of_col(A.cols, -1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (!m.at(i, j).is_zero()) {
                lead_of_col[j] = static_cast<long>(i);
                break;
            }
        }
    }
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (lead_of_col[f] >= 0) continue;  // pivot column
        std::vector<F> v(A.cols, F(0));
        v[f] = F(1);
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (lead_of_col[j] < 0) continue;
            v[j] = -m.at(static_cast<std::size_t>(lead_of_col[j]), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One nonzero left null vector of A, or nullopt if A has full row rank.
template <class F>
std::optional<std::vector<F>> left_null_vector(const Matrix<F>& A) {
    Matrix<F> t(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) t.at(j, i) = A.at(i, j);
    auto basis = nullspace_basis(t);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& A) {
    if (A.rows != A.cols) throw Error("Matrix: inverse of non-square");
    Matrix<F> m(A.rows, 2 * A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols + i) = F(1);
    }
    if (echelonize(m, A.cols) != A.rows) return std::nullopt;
    // echelonize produces reduced form with unit pivots but row order follows
    // pivot discovery; rows are already in column order since ranks advance
    Matrix<F> inv(A.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::size_t lead = A.cols;
        for (std::size_t j = 0; j < A.cols; ++j)
            if (!m.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead == A.cols) return std::nullopt;
        for (std::size_t j = 0; j < A.cols; ++j) inv.at(lead, j) = m.at(i, A.cols + j);
    }
    return inv;
}

// Coefficients expressing `target` as a combination of `rows`, or nullopt.
template <class F>
std::optional<std::vector<F>> express_in_rows(const std::vector<std::vector<F>>& rows,
                                              const std::vector<F>& target) {
    if (rows.empty()) return std::nullopt;
    std::size_t n = target.size();
    Matrix<F> A(n, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) A.at(i, j) = rows[j][i];
    return solve_linear(A, target);
}

template <class F>
std::size_t rank_of(const Matrix<F>& A) {
    Matrix<F> m = A;
    return echelonize(m, A.cols);
}

}  // namespace oresolve
