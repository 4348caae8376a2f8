#pragma once

// Exact checks of the Alexandrov-Fenchel family and of discrete concavity of
// I -> log V_I on the simplex.  No logarithm is ever evaluated for a verdict:
// with rational weights w_J = p_J / q the comparison
//     q log V_I  vs  sum_J p_J log V_J
// is decided as V_I^q vs prod_J V_J^{p_J} in exact arithmetic.

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixvol/bodies.hpp"
#include "mixvol/errors.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/mixed.hpp"
#include "mixvol/multi_index.hpp"
#include "mixvol/permanent.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/simplex_lp.hpp"

namespace mixvol {

/// log v for v > 0, or -infinity (v = 0 by convention).
class LogValue {
public:
    static LogValue of(const Rational& v) {
        if (v.sign() < 0) throw DomainError("logarithm of a negative value");
        return v.is_zero() ? LogValue() : LogValue(v);
    }
    static LogValue negative_infinity() { return LogValue(); }

    bool finite() const { return arg_.has_value(); }
    const Rational& argument() const { return *arg_; }

private:
    LogValue() = default;
    explicit LogValue(Rational v) : arg_(std::move(v)) {}
    std::optional<Rational> arg_;
};

enum class Verdict { holds, fails, vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

struct WeightedIndex {
    MultiIndex point;
    Rational weight;
    friend bool operator==(const WeightedIndex&, const WeightedIndex&) = default;
};

/// Exact witness that V_center^q < prod_J V_J^{p_J} where w_J = p_J / q.
struct Certificate {
    MultiIndex center;
    std::vector<WeightedIndex> support;
    Rational lhs;  // V_center^q
    Rational rhs;  // prod_J V_J^{p_J}
    std::string comparison;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Report {
    Verdict verdict = Verdict::vacuous;
    std::vector<Certificate> certificates;
    std::size_t checked_count = 0;
    std::map<std::string, Rational> values;  // coefficients the check consumed, keyed by index
    std::map<std::string, std::string> diagnostics;  // comparison text, float diagnostics; never verdict-bearing
};

namespace detail {

inline mpz_class common_denominator(std::span<const WeightedIndex> support) {
    mpz_class q = 1;
    for (const auto& s : support) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), s.weight.raw().get_den_mpz_t());
    return q;
}

inline std::string coefficient_name(const MultiIndex& i) { return "V" + i.str(); }

// "a/d" and "b/d" over the least common denominator of x and y.
inline std::pair<std::string, std::string> over_common_denominator(const Rational& x, const Rational& y) {
    if (x.is_integer() && y.is_integer()) return {x.str(), y.str()};
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), x.raw().get_den_mpz_t(), y.raw().get_den_mpz_t());
    auto text = [&](const Rational& v) {
        const mpz_class num = v.raw().get_num() * (d / v.raw().get_den());
        return num.get_str() + "/" + d.get_str();
    };
    return {text(x), text(y)};
}

}  // namespace detail

/// Builds the multiplicative comparison for `center` against a weighted support.
inline Certificate make_certificate(const VolumePolynomial& vp, const MultiIndex& center,
                                    std::vector<WeightedIndex> support) {
    const mpz_class q = detail::common_denominator(support);
    const unsigned long qe = q.get_ui();
    Certificate c{center, std::move(support), pow(vp.at(center), qe), Rational(1), {}};
    std::string rhs_text;
    for (const auto& s : c.support) {
        const unsigned long p = (s.weight * Rational(q)).numerator().get_ui();
        c.rhs *= pow(vp.at(s.point), p);
        rhs_text += (rhs_text.empty() ? "" : " * ") + detail::coefficient_name(s.point) + "^" + std::to_string(p);
    }
    const char* rel = c.lhs < c.rhs ? " < " : (c.lhs == c.rhs ? " = " : " > ");
    const auto [lhs_text, rhs_value_text] = detail::over_common_denominator(c.lhs, c.rhs);
    c.comparison = detail::coefficient_name(center) + "^" + std::to_string(qe) + " = " + lhs_text + rel +
                   rhs_value_text + " = " + rhs_text;
    return c;
}

/// Recomputes a certificate from the polynomial and checks every invariant:
/// positive weights summing to 1, barycenter equal to the center, both sides
/// reproduced exactly, and a strict violation.
inline bool reverify(const Certificate& c, const VolumePolynomial& vp) {
    if (c.support.empty()) return false;
    Rational wsum;
    std::vector<Rational> bary(c.center.size());
    for (const auto& s : c.support) {
        if (s.weight.sign() <= 0 || s.point.size() != c.center.size()) return false;
        if (!vp.contains(s.point)) return false;
        wsum += s.weight;
        for (std::size_t i = 0; i < bary.size(); ++i) bary[i] += s.weight * Rational(static_cast<long>(s.point[i]));
    }
    if (wsum != Rational(1) || !vp.contains(c.center)) return false;
    for (std::size_t i = 0; i < bary.size(); ++i)
        if (bary[i] != Rational(static_cast<long>(c.center[i]))) return false;
    const Certificate again = make_certificate(vp, c.center, c.support);
    return again == c && c.lhs < c.rhs;
}

/// rhs/lhs of the multiplicative comparison; the "violation ratio".
inline Rational violation_ratio(const Certificate& c) {
    if (c.lhs.is_zero()) throw DomainError("violation ratio undefined for a zero left-hand side");
    return c.rhs / c.lhs;
}

/// Compares the per-unit-weight strength (rhs/lhs)^(1/q) of two comparisons
/// exactly by raising both to the product of their exponents.
inline std::strong_ordering compare_strength(const Certificate& a, const Certificate& b) {
    const unsigned long qa = detail::common_denominator(a.support).get_ui();
    const unsigned long qb = detail::common_denominator(b.support).get_ui();
    // (ra/la)^qb vs (rb/lb)^qa, cleared of denominators (la, lb > 0).
    const Rational left = pow(a.rhs, qb) * pow(b.lhs, qa);
    const Rational right = pow(b.rhs, qa) * pow(a.lhs, qb);
    return left <=> right;
}

namespace detail {

inline Report finish(Report r) {
    if (!r.certificates.empty()) r.verdict = Verdict::fails;
    else r.verdict = r.checked_count == 0 ? Verdict::vacuous : Verdict::holds;
    return r;
}

inline MultiIndex shifted(MultiIndex i, std::size_t up, std::size_t down) {
    ++i[up];
    --i[down];
    return i;
}

// Unique barycentric weights of `center` with respect to affinely independent
// points; nullopt when the points are dependent or the center is off their
// affine hull.
inline std::optional<RationalVector> barycentric(std::span<const MultiIndex* const> pts, const MultiIndex& center) {
    const std::size_t s = pts.size(), k = center.size();
    Matrix aug(k + 1, s + 1);
    for (std::size_t j = 0; j < s; ++j) {
        aug(0, j) = 1;
        for (std::size_t c = 0; c < k; ++c) aug(c + 1, j) = static_cast<long>((*pts[j])[c]);
    }
    aug(0, s) = 1;
    for (std::size_t c = 0; c < k; ++c) aug(c + 1, s) = static_cast<long>(center[c]);

    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t p = row;
        while (p < k + 1 && aug(p, col).is_zero()) ++p;
        if (p == k + 1) return std::nullopt;  // dependent columns
        if (p != row)
            for (std::size_t j = 0; j <= s; ++j) std::swap(aug(p, j), aug(row, j));
        const Rational inv = Rational(1) / aug(row, col);
        for (std::size_t j = col; j <= s; ++j) aug(row, j) *= inv;
        for (std::size_t i = 0; i < k + 1; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            const Rational f = aug(i, col);
            for (std::size_t j = col; j <= s; ++j) aug(i, j) -= f * aug(row, j);
        }
        ++row;
    }
    for (std::size_t i = row; i < k + 1; ++i)
        if (!aug(i, s).is_zero()) return std::nullopt;
    RationalVector w(s);
    for (std::size_t j = 0; j < s; ++j) w[j] = aug(j, s);
    return w;
}

// Is `center` in the convex hull of `pts`?  Phase-1 feasibility of
// { w >= 0 : sum w = 1, sum w_J J = center }.
inline bool in_convex_hull(std::span<const MultiIndex* const> pts, const MultiIndex& center) {
    if (pts.empty()) return false;
    const std::size_t k = center.size();
    Matrix a(k + 1, pts.size());
    RationalVector b(k + 1), c(pts.size());
    b[0] = 1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        a(0, j) = 1;
        for (std::size_t r = 0; r < k; ++r) a(r + 1, j) = static_cast<long>((*pts[j])[r]);
    }
    for (std::size_t r = 0; r < k; ++r) b[r + 1] = static_cast<long>(center[r]);
    return simplex_max(c, a, b).status == LpStatus::optimal;
}

// For each center with V_I > 0, the strongest vertex of its weight polytope
// (regardless of whether it violates).  Vertices are the affinely independent
// subsets of the other positive points carrying `center` in their relative
// interior; their size is at most k.
inline std::vector<Certificate> strongest_vertices(const VolumePolynomial& vp, std::size_t& centers_checked) {
    std::vector<const MultiIndex*> positive;
    for (const auto& [idx, v] : vp.coefficients())
        if (v.sign() > 0) positive.push_back(&idx);

    std::vector<Certificate> out;
    centers_checked = 0;
    const std::size_t k = vp.k();
    for (const MultiIndex* center : positive) {
        ++centers_checked;
        std::vector<const MultiIndex*> others;
        for (const MultiIndex* p : positive)
            if (p != center) others.push_back(p);
        if (!in_convex_hull(others, *center)) continue;

        std::optional<Certificate> best;
        std::vector<std::size_t> pick;
        std::vector<const MultiIndex*> chosen;
        const std::size_t max_size = std::min(k, others.size());
        for (std::size_t size = 1; size <= max_size; ++size) {
            pick.resize(size);
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                chosen.clear();
                for (std::size_t i : pick) chosen.push_back(others[i]);
                if (auto w = barycentric(chosen, *center);
                    w && std::all_of(w->begin(), w->end(), [](const Rational& x) { return x.sign() > 0; })) {
                    std::vector<WeightedIndex> support;
                    for (std::size_t i = 0; i < size; ++i) support.push_back({*chosen[i], (*w)[i]});
                    Certificate cand = make_certificate(vp, *center, std::move(support));
                    if (!best || compare_strength(cand, *best) > 0) best = std::move(cand);
                }
                std::size_t i = size;
                while (i-- > 0 && pick[i] == others.size() - size + i) {}
                if (i == static_cast<std::size_t>(-1)) break;
                ++pick[i];
                for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        if (best) out.push_back(std::move(*best));
    }
    return out;
}

}  // namespace detail

/// Log-concavity along every edge direction of the simplex:
/// V_I^2 >= V_{I+e_a-e_b} V_{I-e_a+e_b}.
inline Report segment_concavity(const VolumePolynomial& vp) {
    Report r;
    const std::size_t k = vp.k();
    for (const auto& [idx, v] : vp.coefficients()) {
        r.values[idx.str()] = v;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                if (idx[a] == 0 || idx[b] == 0) continue;
                const MultiIndex plus = detail::shifted(idx, a, b), minus = detail::shifted(idx, b, a);
                if (!vp.contains(plus) || !vp.contains(minus)) continue;
                ++r.checked_count;
                if (v * v < vp.at(plus) * vp.at(minus))
                    r.certificates.push_back(make_certificate(
                        vp, idx, {{plus, Rational(1, 2)}, {minus, Rational(1, 2)}}));
            }
    }
    return detail::finish(std::move(r));
}

/// Concave-envelope test: f(I) = log V_I must dominate every convex
/// combination of the other simplex points that lands on I.  One certificate
/// (the strongest violation) per failing center.  Vacuous only for an empty
/// polynomial.
inline Report gromov_concavity(const VolumePolynomial& vp) {
    Report r;
    for (const auto& [idx, v] : vp.coefficients()) r.values[idx.str()] = v;
    std::size_t positive_centers = 0;
    for (auto& c : detail::strongest_vertices(vp, positive_centers))
        if (c.lhs < c.rhs) r.certificates.push_back(std::move(c));
    // Centers with V_I <= 0 hold automatically but still count as checked.
    r.checked_count = vp.coefficients().size();
    return detail::finish(std::move(r));
}

namespace detail {

// Single comparison center^q vs support, recorded in a Report.
inline Report single_comparison(const VolumePolynomial& vp, const MultiIndex& center,
                                std::vector<WeightedIndex> support) {
    Report r;
    for (const auto& [idx, v] : vp.coefficients()) r.values[idx.str()] = v;
    r.checked_count = 1;
    Certificate c = make_certificate(vp, center, std::move(support));
    r.diagnostics["comparison"] = c.comparison;
    if (c.lhs < c.rhs) r.certificates.push_back(std::move(c));
    return finish(std::move(r));
}

inline MultiIndex af_index(std::size_t n, unsigned first, unsigned second) {
    MultiIndex i(std::vector<unsigned>(n, 1));
    i[0] = first;
    i[1] = second;
    return i;
}

template <class T, class Mixed>
Report af_check(std::span<const T> items, Mixed&& mixed) {
    const std::size_t n = items.size();
    if (n < 2) throw DimensionError("Alexandrov-Fenchel check needs at least two arguments");
    std::vector<T> args(items.begin(), items.end());
    VolumePolynomial vp(n, static_cast<unsigned>(n));
    vp.set(af_index(n, 1, 1), mixed(args));
    args[1] = items[0];
    vp.set(af_index(n, 2, 0), mixed(args));
    args[0] = items[1];
    args[1] = items[1];
    vp.set(af_index(n, 0, 2), mixed(args));
    return single_comparison(vp, af_index(n, 1, 1),
                             {{af_index(n, 2, 0), Rational(1, 2)}, {af_index(n, 0, 2), Rational(1, 2)}});
}

}  // namespace detail

/// V(A1,A2,rest)^2 >= V(A1,A1,rest) V(A2,A2,rest).  Indices in the report
/// refer to the n-tuple (A1, ..., An).
inline Report af_check_volumes(std::span<const Body> bodies) {
    return detail::af_check<Body>(bodies, [](const std::vector<Body>& b) { return mixed_volume(b); });
}

inline Report af_check_discriminants(std::span<const SymMatrix> ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (!is_positive_definite(ms[i]))
            throw PreconditionError("matrix " + std::to_string(i + 1) + " is not positive definite");
    return detail::af_check<SymMatrix>(ms, [](const std::vector<SymMatrix>& m) { return mixed_discriminant(m); });
}

/// V(1,2,3)^3 >= V(1,1,2) V(2,2,3) V(3,3,1) on a k = n = 3 polynomial.
inline Report gromov_triple_check(const VolumePolynomial& vp) {
    if (vp.k() != 3 || vp.n() != 3) throw DimensionError("triple check needs three bodies in R^3");
    return detail::single_comparison(vp, {1, 1, 1},
                                     {{{2, 1, 0}, Rational(1, 3)}, {{0, 2, 1}, Rational(1, 3)}, {{1, 0, 2}, Rational(1, 3)}});
}

/// The four coefficients the triple inequality consumes, by polarization.
inline VolumePolynomial triple_polynomial(std::span<const Body> bodies) {
    if (bodies.size() != 3) throw DimensionError("triple check needs exactly three bodies");
    const Body &a1 = bodies[0], &a2 = bodies[1], &a3 = bodies[2];
    VolumePolynomial vp(3, 3);
    vp.set({1, 1, 1}, mixed_volume(std::vector<Body>{a1, a2, a3}));
    vp.set({2, 1, 0}, mixed_volume(std::vector<Body>{a1, a1, a2}));
    vp.set({0, 2, 1}, mixed_volume(std::vector<Body>{a2, a2, a3}));
    vp.set({1, 0, 2}, mixed_volume(std::vector<Body>{a3, a3, a1}));
    return vp;
}

inline Report gromov_triple_check(std::span<const Body> bodies) {
    return gromov_triple_check(triple_polynomial(bodies));
}

/// Log-concavity of V_j = V(A[j], B[n-j]) (exact), plus the root form of the
/// Brunn-Minkowski inequality in `digits`-digit floating point as a
/// non-authoritative diagnostic.
inline Report minkowski_sequence_check(const Body& a, const Body& b, std::size_t n, unsigned digits = 64) {
    if (ambient_dim(a) != n || ambient_dim(b) != n) throw DimensionError("bodies must live in R^n");
    VolumePolynomial seq(2, static_cast<unsigned>(n));
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<Body> args(j, a);
        args.insert(args.end(), n - j, b);
        seq.set({j, static_cast<unsigned>(n) - j}, mixed_volume(args));
    }
    Report r = segment_concavity(seq);

    const Rational vol_sum = seq.evaluate(std::vector<Rational>{1, 1});
    const Rational vol_a = seq.at({static_cast<unsigned>(n), 0}), vol_b = seq.at({0, static_cast<unsigned>(n)});
    const auto bits = static_cast<mpfr_prec_t>(digits * 3.33 + 16);
    mpfr_t x, y, z, t;
    mpfr_inits2(bits, x, y, z, t, static_cast<mpfr_ptr>(nullptr));
    auto root = [&](mpfr_t out, const Rational& v) {
        mpfr_set_q(out, v.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_rootn_ui(out, out, static_cast<unsigned long>(n), MPFR_RNDN);
    };
    root(x, vol_sum);
    root(y, vol_a);
    root(z, vol_b);
    mpfr_add(t, y, z, MPFR_RNDN);
    auto text = [&](mpfr_t v) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), v);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    };
    r.diagnostics["note"] = "floating-point Brunn-Minkowski root form; non-authoritative";
    r.diagnostics["bm_lhs"] = text(x);
    r.diagnostics["bm_rhs"] = text(t);
    r.diagnostics["bm_holds"] = mpfr_greaterequal_p(x, t) ? "true" : "false";
    r.diagnostics["digits"] = std::to_string(digits);
    mpfr_clears(x, y, z, t, static_cast<mpfr_ptr>(nullptr));
    return r;
}

struct VdwResult {
    Rational permanent;
    Rational margin;  // permanent - n!/n^n
    bool holds = false;
};

/// van der Waerden bound perm(m) >= n!/n^n for doubly stochastic m.
inline VdwResult vdw_check(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("van der Waerden check needs a square matrix");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).sign() < 0)
                throw PreconditionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is negative");
    for (std::size_t i = 0; i < n; ++i) {
        Rational row, col;
        for (std::size_t j = 0; j < n; ++j) {
            row += m(i, j);
            col += m(j, i);
        }
        if (row != Rational(1)) throw PreconditionError("row " + std::to_string(i + 1) + " sums to " + row.str() + ", not 1");
        if (col != Rational(1)) throw PreconditionError("column " + std::to_string(i + 1) + " sums to " + col.str() + ", not 1");
    }
    VdwResult r;
    r.permanent = permanent(m);
    r.margin = r.permanent - factorial(n) / pow(Rational(static_cast<long>(n)), n);
    r.holds = r.margin.sign() >= 0;
    return r;
}

}  // namespace mixvol
