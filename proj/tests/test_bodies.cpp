#include <gtest/gtest.h>

#include <algorithm>

#include "mixvol/bodies.hpp"
#include "support.hpp"

using namespace mixvol;
using mixvol::testing::Gen;
using mixvol::testing::box;

namespace {

Body unit_cube() { return box({1, 1, 1}); }

std::vector<Body> counterexample_bodies() {
    return {box({1, 1, 0}), box({1, 0, 5}), box({0, Rational(1, 3), 1})};
}

Point pt(std::initializer_list<Rational> c) { return Point(c); }

}  // namespace

TEST(Scale, Examples) {
    EXPECT_EQ(scale(unit_cube(), 2), box({2, 2, 2}));
    const Body z = Zonotope(2, {pt({1, 2}), pt({0, 1})});
    EXPECT_EQ(scale(z, 1), z);
    EXPECT_EQ(scale(box({1, 5}), Rational(1, 5)), box({Rational(1, 5), 1}));
    EXPECT_THROW(scale(unit_cube(), -1), DomainError);
}

TEST(Scale, ZeroCollapsesToThePoint) {
    const Body b = AxisBox({Interval(1, 2), Interval(-1, 3)});
    const Body s = scale(b, 0);
    EXPECT_EQ(volume(s), Rational(0));
    EXPECT_EQ(affine_dimension(s), 0U);
}

TEST(MinkowskiSum, Examples) {
    const auto bodies = counterexample_bodies();
    const Body s = minkowski_sum({{1, bodies[0]}, {1, bodies[1]}, {1, bodies[2]}});
    EXPECT_EQ(s, box({2, Rational(4, 3), 6}));

    const Body z = Zonotope(3, {pt({1, 1, 0})});
    EXPECT_EQ(minkowski_sum({{1, z}}), z);

    const Body e1 = Zonotope(2, {pt({1, 0})}), e2 = Zonotope(2, {pt({0, 1})});
    EXPECT_EQ(minkowski_sum({{1, e1}, {1, e2}}), Body(Zonotope(2, {pt({1, 0}), pt({0, 1})})));
}

TEST(MinkowskiSum, Errors) {
    EXPECT_THROW(minkowski_sum({{1, box({1, 1})}, {1, unit_cube()}}), DimensionError);
    EXPECT_THROW(minkowski_sum({{-1, unit_cube()}}), DomainError);
    const Body z4 = Zonotope(4, {pt({1, 0, 0, 0})});
    EXPECT_THROW(minkowski_sum({{1, box({1, 1, 1, 1})}, {1, z4}}), UnsupportedError);
    EXPECT_THROW(minkowski_sum(std::span<const std::pair<Rational, Body>>{}), DimensionError);
}

TEST(MinkowskiSum, MixedKindsBecomeVertexSets) {
    const Body s = minkowski_sum({{1, unit_cube()}, {2, Zonotope(3, {pt({1, 0, 0})})}});
    ASSERT_TRUE(std::holds_alternative<VPolytope>(s));
    EXPECT_EQ(volume(s), Rational(3));
}

TEST(Volume, Examples) {
    EXPECT_EQ(volume(unit_cube()), Rational(1));
    EXPECT_EQ(volume(box({2, Rational(4, 3), 6})), Rational(16));
    EXPECT_EQ(volume(Zonotope(3, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})), Rational(1));
    EXPECT_EQ(volume(counterexample_bodies()[0]), Rational(0));
}

TEST(Volume, LowDimensionalPolytopes) {
    EXPECT_EQ(volume(VPolytope(1, {pt({3}), pt({-1}), pt({Rational(1, 2)})})), Rational(4));
    EXPECT_EQ(volume(VPolytope(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1}), pt({Rational(1, 2), Rational(1, 2)})})),
              Rational(2));
    EXPECT_EQ(volume(VPolytope(2, {pt({0, 0}), pt({1, 1}), pt({2, 2})})), Rational(0));
    EXPECT_THROW(VPolytope(4, {Point(4, Rational(0))}), UnsupportedError);
}

TEST(AffineDimension, Examples) {
    EXPECT_EQ(affine_dimension(counterexample_bodies()[0]), 2U);
    EXPECT_EQ(affine_dimension(VPolytope(3, {pt({1, 2, 3})})), 0U);
    EXPECT_EQ(affine_dimension(unit_cube()), 3U);
    EXPECT_EQ(affine_dimension(Zonotope(3, {pt({1, 1, 0}), pt({2, 2, 0})})), 1U);
    EXPECT_EQ(affine_dimension(Zonotope(3, {})), 0U);
}

TEST(BodyProperties, BoxSumVolumeIsProductOfSummedSides) {
    Gen g(41);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 5)), parts = static_cast<std::size_t>(g.integer(1, 4));
        std::vector<std::pair<Rational, Body>> terms;
        std::vector<Rational> lengths(n);
        for (std::size_t p = 0; p < parts; ++p) {
            std::vector<Interval> sides;
            const Rational lambda = g.rational(4, 3, false);
            for (std::size_t i = 0; i < n; ++i) {
                const Rational lo = g.rational(), len = g.rational(5, 4, false);
                sides.emplace_back(lo, lo + len);
                lengths[i] += lambda * len;
            }
            terms.emplace_back(lambda, AxisBox(sides));
        }
        Rational expected(1);
        for (const auto& l : lengths) expected *= l;
        EXPECT_EQ(volume(minkowski_sum(terms)), expected);

        std::reverse(terms.begin(), terms.end());
        EXPECT_EQ(volume(minkowski_sum(terms)), expected);
    }
}

TEST(BodyProperties, VolumeScalesWithPowerOfDimension) {
    Gen g(42);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<Point> gens(static_cast<std::size_t>(g.integer(static_cast<long>(n), 5)), Point(n));
        for (auto& v : gens)
            for (auto& c : v) c = g.rational(4, 3);
        const Rational lambda = g.rational(5, 4, false);
        std::vector<Rational> lengths;
        for (const auto& c : gens[0]) lengths.push_back(abs(c));
        const std::vector<Body> shapes{Zonotope(n, gens), VPolytope(n, gens), AxisBox::from_lengths(lengths)};
        for (const Body& b : shapes)
            EXPECT_EQ(volume(scale(b, lambda)), pow(lambda, n) * volume(b)) << kind_name(b);
    }
}

TEST(BodyProperties, AxisAlignedZonotopeEqualsBox) {
    Gen g(43);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
        std::vector<Rational> len(n);
        std::vector<Point> gens;
        for (std::size_t i = 0; i < n; ++i) {
            len[i] = g.rational(5, 3, false);
            Point e(n, Rational(0));
            e[i] = len[i];
            gens.push_back(e);
        }
        EXPECT_EQ(volume(Zonotope(n, gens)), volume(AxisBox::from_lengths(len)));
    }
}

TEST(BodyProperties, BoxAndVertexRepresentationsAgree) {
    Gen g(44);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<Interval> sides;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational lo = g.rational();
            sides.emplace_back(lo, lo + g.rational(4, 3, false));
        }
        const Body b = AxisBox(sides);
        EXPECT_EQ(volume(VPolytope(n, vertex_set(b))), volume(b));
        EXPECT_EQ(affine_dimension(VPolytope(n, vertex_set(b))), affine_dimension(b));
    }
}

TEST(BodyProperties, ZonotopeAndVertexRepresentationsAgree) {
    Gen g(45);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
        std::vector<Point> gens(static_cast<std::size_t>(g.integer(1, 5)), Point(n));
        for (auto& v : gens)
            for (auto& c : v) c = g.rational(3, 2);
        const Body z = Zonotope(n, gens);
        EXPECT_EQ(volume(VPolytope(n, vertex_set(z))), volume(z));
    }
}
