#pragma once

// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
// subset enumeration: consecutive subsets differ by one column, so each step
// updates the row sums by a single column in O(n).
//
//   perm(A) = (-1)^n  sum_{S subset [n]} (-1)^{|S|} prod_i sum_{j in S} a_ij
//
// Rows are first scaled to integers so the inner loop runs on mpz_class.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

struct PermanentOptions {
    /// Worker threads splitting the 2^n subset range. 0 or 1 runs inline.
    unsigned jobs = 1;
};

namespace detail {

inline mpz_class lcm_of_denominators(std::span<const Rational> row) {
    mpz_class l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
    return l;
}

// Signed Ryser partial sum over Gray-code positions [begin, end).
inline mpz_class ryser_range(const std::vector<std::vector<mpz_class>>& a, std::uint64_t begin,
                             std::uint64_t end) {
    const std::size_t n = a.size();
    std::vector<mpz_class> row_sums(n, 0);
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < n; ++j)
        if (gray >> j & 1U)
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += a[i][j];

    mpz_class total = 0, prod;
    auto accumulate = [&](std::uint64_t g) {
        if (g == 0) return;
        prod = 1;
        for (const auto& s : row_sums) {
            if (s == 0) return;
            prod *= s;
        }
        if (std::popcount(g) % 2 == 0) total += prod;
        else total -= prod;
    };

    accumulate(gray);
    for (std::uint64_t t = begin + 1; t < end; ++t) {
        const auto col = static_cast<std::size_t>(std::countr_zero(t));
        const std::uint64_t next = t ^ (t >> 1);
        if (next >> col & 1U)
            for (std::size_t i = 0; i < n; ++i) row_sums[i] += a[i][col];
        else
            for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a[i][col];
        gray = next;
        accumulate(gray);
    }
    return total;
}

}  // namespace detail

inline Rational permanent(const Matrix& m, PermanentOptions opts = {}) {
    if (!m.is_square()) throw DimensionError("permanent requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n > 40) throw UnsupportedError("permanent: dimension too large for 2^n enumeration");

    std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class l = detail::lcm_of_denominators(m.row(i));
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(i, j).raw();
            ints[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    const std::uint64_t count = std::uint64_t{1} << n;
    const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, 64));
    mpz_class total = 0;
    if (jobs == 1 || n < 8) {
        total = detail::ryser_range(ints, 0, count);
    } else {
        std::vector<mpz_class> partial(jobs);
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (count + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t b = std::min(count, w * chunk), e = std::min(count, b + chunk);
            workers.emplace_back([&, w, b, e] { partial[w] = b < e ? detail::ryser_range(ints, b, e) : 0; });
        }
        for (auto& t : workers) t.join();
        for (const auto& p : partial) total += p;
    }
    if (n % 2 == 1) total = -total;
    return Rational(mpq_class(total, scale));
}

namespace bench {

/// Double-precision Ryser.  Benchmarks only: no verdict path may call this.
inline double permanent_double(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("permanent requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;
    std::vector<double> a(n * n), sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).to_double();
    double total = 0.0;
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
        const auto col = static_cast<std::size_t>(std::countr_zero(t));
        const std::uint64_t g = t ^ (t >> 1);
        const double sgn = (g >> col & 1U) ? 1.0 : -1.0;
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            sums[i] += sgn * a[i * n + col];
            prod *= sums[i];
        }
        total += (std::popcount(g) % 2 == 0) ? prod : -prod;
    }
    return n % 2 == 1 ? -total : total;
}

}  // namespace bench

}  // namespace mixvol
