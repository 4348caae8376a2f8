#pragma once

// Exact convex hulls in R^2 and R^3 by incremental insertion.  Coordinates
// are rescaled to a common integer lattice so orientation predicates run on
// mpz_class; signs are unaffected by the positive rescaling.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

using Point = std::vector<Rational>;

struct HullFacet {
    std::array<std::size_t, 3> vertices;  // indices into the input; outward (counter-clockwise seen from outside)
};

struct Hull3 {
    std::size_t affine_dimension = 0;
    std::vector<HullFacet> facets;  // empty unless affine_dimension == 3
};

namespace detail {

using IPoint = std::vector<mpz_class>;

// Common-denominator integer image of a point set.
inline std::vector<IPoint> to_lattice(std::span<const Point> pts, mpz_class& scale) {
    scale = 1;
    for (const auto& p : pts)
        for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.raw().get_den_mpz_t());
    std::vector<IPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        IPoint q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i].raw().get_num() * (scale / p[i].raw().get_den());
        out.push_back(std::move(q));
    }
    return out;
}

// det[b-a, c-a, d-a]; positive when d lies on the side of plane (a,b,c)
// that the right-hand normal (b-a)x(c-a) points to.
inline mpz_class orient3(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
    const mpz_class bx = b[0] - a[0], by = b[1] - a[1], bz = b[2] - a[2];
    const mpz_class cx = c[0] - a[0], cy = c[1] - a[1], cz = c[2] - a[2];
    const mpz_class dx = d[0] - a[0], dy = d[1] - a[1], dz = d[2] - a[2];
    return bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx);
}

inline mpz_class cross2(const IPoint& o, const IPoint& a, const IPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline std::size_t affine_rank(std::span<const Point> pts) {
    if (pts.empty()) return 0;
    const std::size_t d = pts[0].size();
    Matrix diffs(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(std::move(diffs));
}

}  // namespace detail

inline Hull3 convex_hull_3d(std::span<const Point> points) {
    if (points.empty()) throw DomainError("convex hull of an empty point set");
    for (const auto& p : points)
        if (p.size() != 3) throw DimensionError("convex_hull_3d expects points in R^3");

    mpz_class scale;
    const auto pts = detail::to_lattice(points, scale);
    const std::size_t n = pts.size();

    // Seed tetrahedron: distinct, non-collinear, non-coplanar.
    std::size_t i1 = n, i2 = n, i3 = n;
    for (std::size_t i = 1; i < n && i1 == n; ++i)
        if (pts[i] != pts[0]) i1 = i;
    if (i1 == n) return {0, {}};
    for (std::size_t i = i1 + 1; i < n && i2 == n; ++i) {
        const detail::IPoint& a = pts[0];
        const mpz_class ux = pts[i1][0] - a[0], uy = pts[i1][1] - a[1], uz = pts[i1][2] - a[2];
        const mpz_class vx = pts[i][0] - a[0], vy = pts[i][1] - a[1], vz = pts[i][2] - a[2];
        if (uy * vz - uz * vy != 0 || uz * vx - ux * vz != 0 || ux * vy - uy * vx != 0) i2 = i;
    }
    if (i2 == n) return {1, {}};
    for (std::size_t i = i2 + 1; i < n && i3 == n; ++i)
        if (detail::orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
    if (i3 == n) return {2, {}};

    struct Face {
        std::array<std::size_t, 3> v;
        bool alive = true;
    };
    std::vector<Face> faces;
    auto add_face = [&](std::size_t a, std::size_t b, std::size_t c) { faces.push_back({{a, b, c}}); };
    // Orient the seed so that every face sees the opposite vertex on its negative side.
    if (detail::orient3(pts[0], pts[i1], pts[i2], pts[i3]) > 0) std::swap(i1, i2);
    add_face(0, i1, i2);
    add_face(0, i2, i3);
    add_face(0, i3, i1);
    add_face(i1, i3, i2);

    for (std::size_t p = 0; p < n; ++p) {
        if (p == 0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            const auto& v = faces[f].v;
            if (detail::orient3(pts[v[0]], pts[v[1]], pts[v[2]], pts[p]) > 0) visible.push_back(f);
        }
        if (visible.empty()) continue;

        std::map<std::pair<std::size_t, std::size_t>, bool> edge_visible;
        for (std::size_t f : visible) faces[f].alive = false;
        for (const auto& face : faces) {
            if (!face.alive) continue;
            for (int e = 0; e < 3; ++e) edge_visible[{face.v[e], face.v[(e + 1) % 3]}] = false;
        }
        for (std::size_t f : visible) {
            const auto v = faces[f].v;
            for (int e = 0; e < 3; ++e) {
                const std::size_t a = v[e], b = v[(e + 1) % 3];
                // Horizon edge: the twin (b, a) belongs to a surviving face.
                auto twin = edge_visible.find({b, a});
                if (twin != edge_visible.end() && !twin->second) add_face(a, b, p);
            }
        }
        std::erase_if(faces, [](const Face& f) { return !f.alive; });
    }

    Hull3 out{3, {}};
    out.facets.reserve(faces.size());
    for (const auto& f : faces) out.facets.push_back({f.v});
    return out;
}

/// Volume enclosed by a 3-D hull (0 when the hull is flat).
inline Rational hull_volume(std::span<const Point> points, const Hull3& hull) {
    if (hull.affine_dimension < 3) return Rational(0);
    mpz_class scale;
    const auto pts = detail::to_lattice(points, scale);
    const auto& ref = pts[hull.facets.front().vertices[0]];
    mpz_class six_vol = 0;
    for (const auto& f : hull.facets) six_vol -= detail::orient3(pts[f.vertices[0]], pts[f.vertices[1]], pts[f.vertices[2]], ref);
    mpz_class denom = 6 * scale * scale * scale;
    return Rational(mpq_class(six_vol, denom));
}

/// Area of the convex hull of points in R^2 (Andrew's monotone chain).
inline Rational polygon_hull_area(std::span<const Point> points) {
    if (points.empty()) throw DomainError("convex hull of an empty point set");
    mpz_class scale;
    auto pts = detail::to_lattice(points, scale);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return Rational(0);
    std::vector<detail::IPoint> chain(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && detail::cross2(chain[k - 2], chain[k - 1], p) <= 0) --k;
        chain[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && detail::cross2(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
        chain[k++] = pts[i];
    }
    chain.resize(k - 1);
    mpz_class twice = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& a = chain[i];
        const auto& b = chain[(i + 1) % chain.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return Rational(mpq_class(twice, 2 * scale * scale));
}

}  // namespace mixvol
