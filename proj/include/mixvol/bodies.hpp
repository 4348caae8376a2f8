#pragma once

// Convex bodies supported exactly: axis-parallel boxes (possibly flat),
// zonotopes (sums of segments [0, v]) and vertex-described polytopes in
// dimension at most 3.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/hull.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

inline constexpr std::size_t kMaxPolytopeDim = 3;

struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw DomainError("interval with hi < lo");
    }
    Rational length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct AxisBox {
    std::vector<Interval> sides;

    AxisBox() = default;
    explicit AxisBox(std::vector<Interval> s) : sides(std::move(s)) {
        if (sides.empty()) throw DimensionError("box needs at least one side");
    }
    /// Box [0, a_1] x ... x [0, a_n].
    static AxisBox from_lengths(std::span<const Rational> lengths) {
        std::vector<Interval> s;
        for (const auto& a : lengths) s.emplace_back(Rational(0), a);
        return AxisBox(std::move(s));
    }
    std::size_t dim() const { return sides.size(); }
    friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

struct Zonotope {
    std::size_t dim = 0;
    std::vector<Point> generators;

    Zonotope() = default;
    Zonotope(std::size_t d, std::vector<Point> gens) : dim(d), generators(std::move(gens)) {
        if (dim == 0) throw DimensionError("zonotope dimension must be positive");
        for (const auto& g : generators)
            if (g.size() != dim) throw DimensionError("zonotope generator length does not match dimension");
    }
    friend bool operator==(const Zonotope&, const Zonotope&) = default;
};

struct VPolytope {
    std::size_t dim = 0;
    std::vector<Point> vertices;

    VPolytope() = default;
    VPolytope(std::size_t d, std::vector<Point> verts) : dim(d), vertices(std::move(verts)) {
        if (dim == 0 || dim > kMaxPolytopeDim)
            throw UnsupportedError("vertex polytopes are supported in dimensions 1..3");
        if (vertices.empty()) throw DomainError("polytope needs at least one vertex");
        for (const auto& v : vertices)
            if (v.size() != dim) throw DimensionError("vertex length does not match dimension");
    }
    friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

using Body = std::variant<AxisBox, Zonotope, VPolytope>;

inline std::size_t ambient_dim(const Body& b) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, AxisBox>) return x.dim();
            else return x.dim;
        },
        b);
}

inline const char* kind_name(const Body& b) {
    static constexpr const char* names[] = {"box", "zonotope", "vpolytope"};
    return names[b.index()];
}

inline Body scale(const Body& b, const Rational& lambda) {
    if (lambda.sign() < 0) throw DomainError("scale factor must be nonnegative");
    auto scale_point = [&](Point p) {
        for (auto& c : p) c *= lambda;
        return p;
    };
    struct Visitor {
        const Rational& lambda;
        decltype(scale_point)& sp;
        Body operator()(const AxisBox& x) const {
            std::vector<Interval> s;
            for (const auto& iv : x.sides) s.emplace_back(lambda * iv.lo, lambda * iv.hi);
            return AxisBox(std::move(s));
        }
        Body operator()(const Zonotope& z) const {
            std::vector<Point> g;
            for (const auto& v : z.generators) g.push_back(sp(v));
            return Zonotope(z.dim, std::move(g));
        }
        Body operator()(const VPolytope& p) const {
            std::vector<Point> v;
            for (const auto& x : p.vertices) v.push_back(sp(x));
            return VPolytope(p.dim, std::move(v));
        }
    };
    return std::visit(Visitor{lambda, scale_point}, b);
}

/// Vertex set (possibly redundant) of a body; only meaningful for dim <= 3.
inline std::vector<Point> vertex_set(const Body& b) {
    if (ambient_dim(b) > kMaxPolytopeDim)
        throw UnsupportedError("vertex conversion is limited to dimension <= 3");
    if (const auto* box = std::get_if<AxisBox>(&b)) {
        std::vector<Point> pts{Point{}};
        for (const auto& iv : box->sides) {
            std::vector<Point> next;
            for (const auto& p : pts) {
                auto a = p;
                a.push_back(iv.lo);
                next.push_back(std::move(a));
                if (!iv.degenerate()) {
                    auto c = p;
                    c.push_back(iv.hi);
                    next.push_back(std::move(c));
                }
            }
            pts = std::move(next);
        }
        return pts;
    }
    if (const auto* z = std::get_if<Zonotope>(&b)) {
        std::set<Point> pts{Point(z->dim, Rational(0))};
        for (const auto& g : z->generators) {
            std::set<Point> next = pts;
            for (auto p : pts) {
                for (std::size_t i = 0; i < z->dim; ++i) p[i] += g[i];
                next.insert(std::move(p));
            }
            pts = std::move(next);
        }
        return {pts.begin(), pts.end()};
    }
    return std::get<VPolytope>(b).vertices;
}

inline Body minkowski_sum(std::span<const std::pair<Rational, Body>> parts) {
    if (parts.empty()) throw DimensionError("Minkowski sum of no bodies");
    const std::size_t n = ambient_dim(parts.front().second);
    bool all_boxes = true, all_zonotopes = true;
    for (const auto& [lambda, body] : parts) {
        if (lambda.sign() < 0) throw DomainError("Minkowski coefficient must be nonnegative");
        if (ambient_dim(body) != n) throw DimensionError("Minkowski sum of bodies with different dimensions");
        all_boxes = all_boxes && std::holds_alternative<AxisBox>(body);
        all_zonotopes = all_zonotopes && std::holds_alternative<Zonotope>(body);
    }

    if (all_boxes) {
        std::vector<Interval> sides(n, Interval(Rational(0), Rational(0)));
        for (const auto& [lambda, body] : parts) {
            const auto& box = std::get<AxisBox>(body);
            for (std::size_t i = 0; i < n; ++i)
                sides[i] = Interval(sides[i].lo + lambda * box.sides[i].lo, sides[i].hi + lambda * box.sides[i].hi);
        }
        return AxisBox(std::move(sides));
    }
    if (all_zonotopes) {
        std::vector<Point> gens;
        for (const auto& [lambda, body] : parts) {
            const Body scaled = scale(body, lambda);
            for (const auto& g : std::get<Zonotope>(scaled).generators) gens.push_back(g);
        }
        return Zonotope(n, std::move(gens));
    }

    if (n > kMaxPolytopeDim) throw UnsupportedError("mixed-kind Minkowski sums are limited to dimension <= 3");
    std::vector<Point> acc{Point(n, Rational(0))};
    for (const auto& [lambda, body] : parts) {
        const auto verts = vertex_set(scale(body, lambda));
        std::vector<Point> next;
        next.reserve(acc.size() * verts.size());
        for (const auto& a : acc)
            for (const auto& v : verts) {
                Point s = a;
                for (std::size_t i = 0; i < n; ++i) s[i] += v[i];
                next.push_back(std::move(s));
            }
        acc = std::move(next);
    }
    return VPolytope(n, std::move(acc));
}

inline Body minkowski_sum(std::initializer_list<std::pair<Rational, Body>> parts) {
    return minkowski_sum(std::span<const std::pair<Rational, Body>>(parts.begin(), parts.size()));
}

/// Sum over n-subsets S of the generators of |det(v_S)|.
inline Rational zonotope_volume(const Zonotope& z) {
    const std::size_t n = z.dim, m = z.generators.size();
    if (m < n) return Rational(0);
    Rational total;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        Matrix sub(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sub(r, c) = z.generators[pick[r]][c];
        total += abs(determinant(sub));
        std::size_t i = n;
        while (i-- > 0 && pick[i] == m - n + i) {}
        if (i == static_cast<std::size_t>(-1)) break;
        ++pick[i];
        for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

inline Rational volume(const Body& b) {
    if (const auto* box = std::get_if<AxisBox>(&b)) {
        Rational v(1);
        for (const auto& iv : box->sides) v *= iv.length();
        return v;
    }
    if (const auto* z = std::get_if<Zonotope>(&b)) return zonotope_volume(*z);

    const auto& p = std::get<VPolytope>(b);
    switch (p.dim) {
        case 1: {
            auto [lo, hi] = std::minmax_element(p.vertices.begin(), p.vertices.end(),
                                                [](const Point& a, const Point& c) { return a[0] < c[0]; });
            return (*hi)[0] - (*lo)[0];
        }
        case 2:
            return polygon_hull_area(p.vertices);
        case 3:
            return hull_volume(p.vertices, convex_hull_3d(p.vertices));
        default:
            throw UnsupportedError("vertex polytope volume is limited to dimension <= 3");
    }
}

inline std::size_t affine_dimension(const Body& b) {
    if (const auto* box = std::get_if<AxisBox>(&b))
        return static_cast<std::size_t>(std::count_if(box->sides.begin(), box->sides.end(),
                                                      [](const Interval& iv) { return !iv.degenerate(); }));
    if (const auto* z = std::get_if<Zonotope>(&b)) {
        if (z->generators.empty()) return 0;
        Matrix g(z->generators.size(), z->dim);
        for (std::size_t i = 0; i < z->generators.size(); ++i)
            for (std::size_t j = 0; j < z->dim; ++j) g(i, j) = z->generators[i][j];
        return rank(std::move(g));
    }
    return detail::affine_rank(std::get<VPolytope>(b).vertices);
}

}  // namespace mixvol
