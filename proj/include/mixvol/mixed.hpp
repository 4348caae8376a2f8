#pragma once

// Mixed volumes and mixed discriminants.  Three independent routes:
//  - polarization: inclusion-exclusion over the 2^n - 1 nonempty subset sums,
//      V(A_1..A_n) = 1/n! sum_{S} (-1)^{n-|S|} Vol(sum_{i in S} A_i);
//  - permanent: for boxes [0,a_i1] x ... x [0,a_in], V = perm(a)/n!
//    (and likewise for diagonal matrices);
//  - interpolation: fit the coefficients of Vol(sum l_i A_i) from exact
//    evaluations on a positive integer grid.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixvol/bodies.hpp"
#include "mixvol/errors.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/multi_index.hpp"
#include "mixvol/permanent.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

/// k bodies sharing one ambient dimension.
class BodyTuple {
public:
    BodyTuple() = default;
    explicit BodyTuple(std::vector<Body> bodies) : bodies_(std::move(bodies)) {
        if (bodies_.empty()) throw DimensionError("body tuple is empty");
        for (const auto& b : bodies_)
            if (ambient_dim(b) != dim()) throw DimensionError("bodies in a tuple must share the ambient dimension");
    }
    std::size_t size() const { return bodies_.size(); }
    std::size_t dim() const { return ambient_dim(bodies_.front()); }
    const std::vector<Body>& bodies() const { return bodies_; }
    const Body& operator[](std::size_t i) const { return bodies_[i]; }

private:
    std::vector<Body> bodies_;
};

class MatrixTuple {
public:
    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<SymMatrix> ms) : ms_(std::move(ms)) {
        if (ms_.empty()) throw DimensionError("matrix tuple is empty");
        for (const auto& m : ms_)
            if (m.dim() != dim()) throw DimensionError("matrices in a tuple must share the dimension");
    }
    std::size_t size() const { return ms_.size(); }
    std::size_t dim() const { return ms_.front().dim(); }
    const std::vector<SymMatrix>& matrices() const { return ms_; }
    const SymMatrix& operator[](std::size_t i) const { return ms_[i]; }

private:
    std::vector<SymMatrix> ms_;
};

/// Multiset expansion: i_1 copies of items[0], i_2 copies of items[1], ...
template <class T>
std::vector<T> expand(const MultiIndex& idx, std::span<const T> items) {
    if (idx.size() != items.size()) throw DimensionError("index length does not match tuple size");
    std::vector<T> out;
    for (std::size_t j = 0; j < items.size(); ++j)
        for (unsigned c = 0; c < idx[j]; ++c) out.push_back(items[j]);
    return out;
}

namespace detail {

// 1/n! sum over nonempty S of (-1)^{n-|S|} measure(sum_{i in S} items_i).
template <class T, class Sum, class Measure>
Rational polarize(std::span<const T> items, Sum&& sum, Measure&& measure) {
    const std::size_t n = items.size();
    Rational total;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<const T*> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) subset.push_back(&items[i]);
        const Rational m = measure(sum(subset));
        if ((n - subset.size()) % 2 == 0) total += m;
        else total -= m;
    }
    return total / factorial(n);
}

}  // namespace detail

/// Mixed volume V(A_1, ..., A_n) of n bodies in R^n (polarization route).
inline Rational mixed_volume(std::span<const Body> bodies) {
    const std::size_t n = bodies.size();
    if (n == 0) throw DimensionError("mixed volume of no bodies");
    for (const auto& b : bodies)
        if (ambient_dim(b) != n)
            throw DimensionError("mixed volume needs exactly n bodies in R^n (got " + std::to_string(n) +
                                 " bodies in R^" + std::to_string(ambient_dim(b)) + ")");
    return detail::polarize<Body>(
        bodies,
        [](const std::vector<const Body*>& subset) {
            std::vector<std::pair<Rational, Body>> parts;
            for (const Body* b : subset) parts.emplace_back(Rational(1), *b);
            return minkowski_sum(parts);
        },
        [](const Body& b) { return volume(b); });
}

/// Box route: row i of `sides` holds the side lengths of box A_i = prod [0, a_ij].
inline Rational mixed_volume_boxes(const Matrix& sides, PermanentOptions opts = {}) {
    if (!sides.is_square()) throw DimensionError("box side matrix must be n x n");
    for (const auto& e : sides.entries())
        if (e.sign() < 0) throw DomainError("box side lengths must be nonnegative");
    return permanent(sides, opts) / factorial(sides.rows());
}

/// Segment route: V([0,v_1], ..., [0,v_n]) = |det(v_1 .. v_n)| / n!.
inline Rational mixed_volume_segments(std::span<const Point> generators) {
    const std::size_t n = generators.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (generators[i].size() != n) throw DimensionError("segment route needs n generators in R^n");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = generators[i][j];
    }
    return abs(determinant(m)) / factorial(n);
}

inline VolumePolynomial volume_polynomial(const BodyTuple& t) {
    const auto n = static_cast<unsigned>(t.dim());
    VolumePolynomial vp(t.size(), n);
    const DiscreteSimplex simplex(t.size(), n);
    for (const auto& idx : simplex.points()) {
        const auto multiset = expand<Body>(idx, t.bodies());
        vp.set(idx, mixed_volume(multiset));
    }
    return vp;
}

/// Permanent route for a k-tuple of boxes [0, a_j1] x ... x [0, a_jn];
/// row j of `sides` (k x n) holds the lengths of box j.
inline VolumePolynomial volume_polynomial_boxes(const Matrix& sides, PermanentOptions opts = {}) {
    const std::size_t k = sides.rows();
    const auto n = static_cast<unsigned>(sides.cols());
    VolumePolynomial vp(k, n);
    const DiscreteSimplex simplex(k, n);
    for (const auto& idx : simplex.points()) {
        Matrix m(n, n);
        std::size_t r = 0;
        for (std::size_t j = 0; j < k; ++j)
            for (unsigned c = 0; c < idx[j]; ++c, ++r)
                for (std::size_t col = 0; col < n; ++col) m(r, col) = sides(j, col);
        vp.set(idx, mixed_volume_boxes(m, opts));
    }
    return vp;
}

/// Fits the coefficients of Vol(sum l_i A_i) directly.  Grid points l in
/// Z_{>0}^k are visited by increasing max-entry then lexicographically, and
/// kept only when they raise the rank of the fit system.
inline VolumePolynomial volume_polynomial_interpolated(const BodyTuple& t) {
    const std::size_t k = t.size();
    const auto n = static_cast<unsigned>(t.dim());
    const DiscreteSimplex simplex(k, n);
    const std::size_t m = simplex.size();

    auto design_row = [&](const std::vector<Rational>& lambda) {
        RationalVector row;
        row.reserve(m);
        for (const auto& idx : simplex.points()) {
            Rational v = multinomial(idx);
            for (std::size_t j = 0; j < k; ++j) v *= pow(lambda[j], idx[j]);
            row.push_back(std::move(v));
        }
        return row;
    };

    std::vector<std::vector<Rational>> chosen;
    std::vector<RationalVector> rows;
    std::vector<std::pair<std::size_t, RationalVector>> echelon;  // (pivot column, reduced row)

    auto try_add = [&](const std::vector<Rational>& lambda) {
        RationalVector row = design_row(lambda);
        RationalVector red = row;
        for (const auto& [p, e] : echelon) {
            if (red[p].is_zero()) continue;
            const Rational f = red[p] / e[p];
            for (std::size_t c = 0; c < m; ++c)
                if (!e[c].is_zero()) red[c] -= f * e[c];
        }
        for (std::size_t c = 0; c < m; ++c)
            if (!red[c].is_zero()) {
                echelon.emplace_back(c, std::move(red));
                chosen.push_back(lambda);
                rows.push_back(std::move(row));
                return;
            }
    };

    const unsigned max_entry_cap = n + 2;
    for (unsigned s = 1; s <= max_entry_cap && chosen.size() < m; ++s) {
        std::vector<unsigned> digits(k, 1);
        for (;;) {
            if (*std::max_element(digits.begin(), digits.end()) == s) {
                std::vector<Rational> lambda(digits.begin(), digits.end());
                try_add(lambda);
                if (chosen.size() == m) break;
            }
            std::size_t pos = k;
            while (pos-- > 0 && digits[pos] == s) digits[pos] = 1;
            if (pos == static_cast<std::size_t>(-1)) break;
            ++digits[pos];
        }
    }
    if (chosen.size() < m) throw SingularSystemError("interpolation grid did not reach full rank");

    Matrix a(m, m);
    RationalVector b(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) a(r, c) = rows[r][c];
        std::vector<std::pair<Rational, Body>> parts;
        for (std::size_t j = 0; j < k; ++j) parts.emplace_back(chosen[r][j], t[j]);
        b[r] = volume(minkowski_sum(parts));
    }
    const RationalVector coeffs = solve_linear(a, b);
    VolumePolynomial vp(k, n);
    for (std::size_t i = 0; i < m; ++i) vp.set(simplex.points()[i], coeffs[i]);
    return vp;
}

/// Mixed discriminant D(A_1, ..., A_n) of n symmetric n x n matrices.
inline Rational mixed_discriminant(std::span<const SymMatrix> ms) {
    const std::size_t n = ms.size();
    if (n == 0) throw DimensionError("mixed discriminant of no matrices");
    for (const auto& m : ms)
        if (m.dim() != n) throw DimensionError("mixed discriminant needs exactly n matrices of size n x n");
    return detail::polarize<SymMatrix>(
        ms,
        [n](const std::vector<const SymMatrix*>& subset) {
            Matrix s(n, n);
            for (const SymMatrix* m : subset) s += m->matrix();
            return s;
        },
        [](const Matrix& m) { return determinant(m); });
}

/// Diagonal shortcut: row i of `diagonals` is the diagonal of A_i.
inline Rational mixed_discriminant_diagonal(const Matrix& diagonals) {
    if (!diagonals.is_square()) throw DimensionError("diagonal matrix rows must form an n x n array");
    return permanent(diagonals) / factorial(diagonals.rows());
}

inline VolumePolynomial discriminant_polynomial(const MatrixTuple& t) {
    const auto n = static_cast<unsigned>(t.dim());
    VolumePolynomial vp(t.size(), n);
    const DiscreteSimplex simplex(t.size(), n);
    for (const auto& idx : simplex.points()) {
        const auto multiset = expand<SymMatrix>(idx, t.matrices());
        vp.set(idx, mixed_discriminant(multiset));
    }
    return vp;
}

}  // namespace mixvol
