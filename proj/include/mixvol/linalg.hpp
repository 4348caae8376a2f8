#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

namespace detail {

// Rows scaled to integers; returns the product of the row scale factors.
inline mpz_class integer_rows(const Matrix& m, std::vector<std::vector<mpz_class>>& out) {
    out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (const auto& e : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j).raw().get_num() * (l / m(i, j).raw().get_den());
    }
    return scale;
}

}  // namespace detail

/// Exact determinant by Bareiss fraction-free elimination.
inline Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> a;
    const mpz_class scale = detail::integer_rows(m, a);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(mpq_class(det, scale));
}

/// Rank by exact Gaussian elimination.
inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Solves a·x = b exactly.  Throws SingularSystemError when a is singular.
inline RationalVector solve_linear(const Matrix& a, std::span<const Rational> b) {
    if (!a.is_square()) throw DimensionError("solve_linear requires a square matrix");
    const std::size_t n = a.rows();
    if (b.size() != n) throw DimensionError("right-hand side length does not match matrix");
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug(p, c).is_zero()) ++p;
        if (p == n) throw SingularSystemError("singular linear system");
        if (p != c)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(c, j));
        const Rational inv = Rational(1) / aug(c, c);
        for (std::size_t j = c; j <= n; ++j) aug(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c).is_zero()) continue;
            const Rational f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

/// Sylvester's criterion.  Bareiss elimination without pivoting leaves the
/// k-th leading principal minor in the k-th pivot position.
inline bool is_positive_definite(const SymMatrix& s) {
    const std::size_t n = s.dim();
    std::vector<std::vector<mpz_class>> a;
    detail::integer_rows(s.matrix(), a);  // positive row scales keep minor signs
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a[k][k]) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return true;
}

}  // namespace mixvol
