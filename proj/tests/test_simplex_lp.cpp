#include <gtest/gtest.h>

#include <optional>

#include "mixvol/linalg.hpp"
#include "mixvol/simplex_lp.hpp"
#include "support.hpp"

using namespace mixvol;
using mixvol::testing::Gen;

TEST(SimplexMax, Examples) {
    auto r = simplex_max(RationalVector{1}, Matrix{{1}}, RationalVector{1});
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.optimum, Rational(1));

    r = simplex_max(RationalVector{1, 1}, Matrix{{1, 1}}, RationalVector{1});
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.optimum, Rational(1));

    r = simplex_max(RationalVector{1, 0}, Matrix{{1, -1}}, RationalVector{0});
    EXPECT_EQ(r.status, LpStatus::unbounded);
}

TEST(SimplexMax, DetectsInfeasibility) {
    EXPECT_EQ(simplex_max(RationalVector{1}, Matrix{{1}}, RationalVector{-1}).status, LpStatus::infeasible);
    EXPECT_EQ(simplex_max(RationalVector{0, 0}, Matrix{{1, 1}, {1, 1}}, RationalVector{1, 2}).status, LpStatus::infeasible);
}

TEST(SimplexMax, HandlesRedundantConstraints) {
    // Second row duplicates the first.
    auto r = simplex_max(RationalVector{2, 3}, Matrix{{1, 1}, {2, 2}}, RationalVector{1, 2});
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.optimum, Rational(3));
}

namespace {

// Best basic feasible solution by enumerating all column subsets of size m.
std::optional<Rational> brute_force_optimum(const RationalVector& c, const Matrix& a, const RationalVector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    std::optional<Rational> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1U) cols.push_back(j);
        Matrix sub(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) sub(i, j) = a(i, cols[j]);
        RationalVector x;
        try {
            x = solve_linear(sub, b);
        } catch (const SingularSystemError&) {
            continue;
        }
        if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() < 0; })) continue;
        Rational obj;
        for (std::size_t j = 0; j < m; ++j) obj += c[cols[j]] * x[j];
        if (!best || obj > *best) best = obj;
    }
    return best;
}

}  // namespace

TEST(SimplexMax, WitnessIsFeasibleAndMatchesVertexEnumeration) {
    Gen g(31);
    int optimal_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
        const std::size_t n = static_cast<std::size_t>(g.integer(static_cast<long>(m) + 1, 6));
        Matrix a = g.matrix(m, n, 5, 3);
        // Feasible by construction; the all-ones row keeps the region bounded.
        for (std::size_t j = 0; j < n; ++j) a(0, j) = 1;
        RationalVector x0(n), b(m), c(n);
        for (auto& v : x0) v = g.rational(4, 3, false);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x0[j];
        for (auto& v : c) v = g.rational();

        const LpResult r = simplex_max(c, a, b);
        ASSERT_EQ(r.status, LpStatus::optimal);
        ++optimal_seen;
        Rational obj, obj0;
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_GE(r.solution[j].sign(), 0);
            obj += c[j] * r.solution[j];
            obj0 += c[j] * x0[j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            Rational s;
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * r.solution[j];
            EXPECT_EQ(s, b[i]);
        }
        EXPECT_EQ(obj, r.optimum);
        EXPECT_GE(r.optimum, obj0);
        if (rank(a) == m) {
            const auto brute = brute_force_optimum(c, a, b);
            ASSERT_TRUE(brute.has_value());
            EXPECT_EQ(*brute, r.optimum);
        }
    }
    EXPECT_EQ(optimal_seen, 60);
}

TEST(SimplexMax, TerminatesOnDegenerateCyclingExample) {
    // Beale's example in equality form (slacks x5..x7); cycles without an
    // anti-cycling rule.  Optimum 5/4 at x1 = x3 = 1.
    const Matrix a{{Rational(1, 4), -8, -1, 9, 1, 0, 0},
                   {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
                   {0, 0, 1, 0, 0, 0, 1}};
    const RationalVector c{Rational(3, 4), -20, Rational(1, 2), -6, 0, 0, 0};
    const auto r = simplex_max(c, a, RationalVector{0, 0, 1});
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.optimum, Rational(5, 4));
    EXPECT_EQ(r.solution[0], Rational(1));
    EXPECT_EQ(r.solution[2], Rational(1));
}
