#pragma once

// Test-only oracles and random generators.  Nothing here calls into the
// implementation paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mixvol/bodies.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/rational.hpp"

namespace mixvol::testing {

/// sum over permutations of prod m[i][sigma(i)]
inline Rational naive_permanent(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total;
    do {
        Rational t(1);
        for (std::size_t i = 0; i < n; ++i) t *= m(i, p[i]);
        total += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Leibniz formula with permutation signs.
inline Rational naive_determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Rational t(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) t *= m(i, p[i]);
        total += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline unsigned long naive_factorial(unsigned n) { return n <= 1 ? 1 : n * naive_factorial(n - 1); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long max_num = 9, long max_den = 5, bool allow_negative = true) {
        const long lo = allow_negative ? -max_num : 0;
        return Rational(integer(lo, max_num), integer(1, max_den));
    }

    Rational pick(const std::vector<Rational>& values) {
        return values[static_cast<std::size_t>(integer(0, static_cast<long>(values.size()) - 1))];
    }

    Matrix matrix(std::size_t rows, std::size_t cols, long max_num = 9, long max_den = 5, bool neg = true) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(max_num, max_den, neg);
        return m;
    }

    /// Side-length matrix with entries from {0, ..., 5}.
    Matrix side_matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (auto i = 0UL; i < rows; ++i)
            for (auto j = 0UL; j < cols; ++j) m(i, j) = Rational(integer(0, 5));
        return m;
    }

    /// M^T M + I, positive definite.
    Matrix positive_definite(std::size_t n) {
        const Matrix m = matrix(n, n, 4, 3);
        Matrix out = m.transpose() * m;
        for (std::size_t i = 0; i < n; ++i) out(i, i) += 1;
        return out;
    }

    /// Normalized random convex combination of permutation matrices.
    Matrix doubly_stochastic(std::size_t n, std::size_t terms) {
        Matrix out(n, n);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<long> weights(terms);
        long total = 0;
        for (auto& w : weights) total += (w = integer(1, 9));
        for (long w : weights) {
            std::shuffle(p.begin(), p.end(), rng_);
            for (std::size_t i = 0; i < n; ++i) out(i, p[i]) += Rational(w, total);
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Body box(std::initializer_list<Rational> lengths) {
    std::vector<Rational> v(lengths);
    return AxisBox::from_lengths(v);
}

/// The three flat boxes of the known counterexample.
inline Matrix counterexample_sides() { return Matrix{{1, 1, 0}, {1, 0, 5}, {0, Rational(1, 3), 1}}; }

}  // namespace mixvol::testing
