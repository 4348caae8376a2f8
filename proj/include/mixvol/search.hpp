#pragma once

// Search over tuples of axis-parallel boxes [0,a_j1] x ... x [0,a_jn] whose
// side lengths come from a finite grid, looking for violations of discrete
// concavity of log V_I.  Candidates are scored through the permanent route;
// verify_finding recomputes through polarization.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "mixvol/bodies.hpp"
#include "mixvol/errors.hpp"
#include "mixvol/inequalities.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/mixed.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

struct SearchSpace {
    std::size_t n = 3;
    std::size_t k = 3;
    std::vector<Rational> side_grid;
};

enum class SearchMode { exhaustive, random, hill_climb };
enum class SearchTarget { triple, envelope };

struct SearchConfig {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t max_evaluations = 1'000'000;
    SearchTarget target = SearchTarget::triple;
    unsigned jobs = 1;
};

struct Finding {
    Matrix side_matrix;  // row j = side lengths of box A_j
    Certificate certificate;
    Rational violation_ratio;  // rhs / lhs, > 1
    SearchTarget target = SearchTarget::triple;
    friend bool operator==(const Finding&, const Finding&) = default;
};

struct SearchResult {
    std::vector<Finding> findings;  // descending violation_ratio
    std::uint64_t evaluations = 0;
};

inline std::vector<Body> boxes_from_sides(const Matrix& sides) {
    std::vector<Body> out;
    for (std::size_t j = 0; j < sides.rows(); ++j) out.emplace_back(AxisBox::from_lengths(sides.row(j)));
    return out;
}

namespace detail {

struct Scored {
    std::optional<Certificate> strongest;  // best comparison seen, violating or not
    bool violates() const { return strongest && strongest->lhs < strongest->rhs; }
};

inline Scored score_triple(const Matrix& sides) {
    auto rows = [&](std::initializer_list<std::size_t> r) {
        Matrix m(3, 3);
        std::size_t i = 0;
        for (std::size_t j : r) {
            for (std::size_t c = 0; c < 3; ++c) m(i, c) = sides(j, c);
            ++i;
        }
        return mixed_volume_boxes(m);
    };
    VolumePolynomial vp(3, 3);
    vp.set({1, 1, 1}, rows({0, 1, 2}));
    vp.set({2, 1, 0}, rows({0, 0, 1}));
    vp.set({0, 2, 1}, rows({1, 1, 2}));
    vp.set({1, 0, 2}, rows({2, 2, 0}));
    Certificate c = make_certificate(
        vp, {1, 1, 1}, {{{2, 1, 0}, Rational(1, 3)}, {{0, 2, 1}, Rational(1, 3)}, {{1, 0, 2}, Rational(1, 3)}});
    if (c.lhs.is_zero()) {
        // A positive product with V(1,2,3) = 0 would contradict the hole-free
        // support of box volume polynomials.
        if (c.rhs.sign() > 0) throw std::logic_error("zero mixed volume inside a positive support");
        return {};
    }
    return {std::move(c)};
}

inline Scored score_envelope(const Matrix& sides) {
    const VolumePolynomial vp = volume_polynomial_boxes(sides);
    std::size_t checked = 0;
    Scored best;
    for (auto& c : strongest_vertices(vp, checked))
        if (!best.strongest || compare_strength(c, *best.strongest) > 0) best.strongest = std::move(c);
    return best;
}

inline Scored score(const Matrix& sides, SearchTarget t) {
    return t == SearchTarget::triple ? score_triple(sides) : score_envelope(sides);
}

// Strictly stronger comparison (plateaus are rejected).
inline bool improves(const Scored& cand, const Scored& cur) {
    if (!cand.strongest) return false;
    if (!cur.strongest) return true;
    return compare_strength(*cand.strongest, *cur.strongest) > 0;
}

inline Matrix candidate_from_digits(const std::vector<std::size_t>& digits, const SearchSpace& s,
                                    const std::vector<Rational>& grid) {
    Matrix m(s.k, s.n);
    for (std::size_t i = 0; i < digits.size(); ++i) m(i / s.n, i % s.n) = grid[digits[i]];
    return m;
}

// Mixed-radix decoding; entry 0 is the most significant digit.
inline std::vector<std::size_t> exhaustive_digits(std::uint64_t index, std::size_t entries, std::size_t base) {
    std::vector<std::size_t> d(entries);
    for (std::size_t i = entries; i-- > 0;) {
        d[i] = static_cast<std::size_t>(index % base);
        index /= base;
    }
    return d;
}

// Counter-based: the candidate depends only on (seed, index).
inline std::vector<std::size_t> random_digits(std::uint64_t seed, std::uint64_t index, std::size_t entries,
                                              std::size_t base) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 gen(seq);
    std::vector<std::size_t> d(entries);
    for (auto& x : d) x = static_cast<std::size_t>(gen() % base);
    return d;
}

inline std::uint64_t grid_size(std::size_t base, std::size_t entries) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        total *= base;
    }
    return total;
}

struct Indexed {
    std::uint64_t index;
    Finding finding;
};

inline Finding to_finding(const Matrix& sides, const Certificate& c, SearchTarget t) {
    return {sides, c, violation_ratio(c), t};
}

inline void sort_findings(std::vector<Indexed>& v) {
    std::sort(v.begin(), v.end(), [](const Indexed& a, const Indexed& b) {
        if (a.finding.violation_ratio != b.finding.violation_ratio)
            return a.finding.violation_ratio > b.finding.violation_ratio;
        return a.index < b.index;
    });
}

}  // namespace detail

inline void validate(const SearchSpace& s, const SearchConfig& c) {
    if (s.side_grid.empty()) throw DomainError("side grid is empty");
    for (const auto& v : s.side_grid)
        if (v.sign() < 0) throw DomainError("side grid values must be nonnegative");
    if (s.n == 0 || s.k == 0) throw DimensionError("search needs n >= 1 and k >= 1");
    if (c.max_evaluations == 0) throw DomainError("max_evaluations must be at least 1");
    if (c.target == SearchTarget::triple && (s.n != 3 || s.k != 3))
        throw DimensionError("triple-inequality target needs k = n = 3");
}

inline SearchResult search(const SearchSpace& space, const SearchConfig& config) {
    validate(space, config);
    std::vector<Rational> grid = space.side_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const std::size_t entries = space.k * space.n, base = grid.size();

    std::vector<detail::Indexed> found;
    SearchResult result;

    if (config.mode == SearchMode::hill_climb) {
        std::set<Matrix, bool (*)(const Matrix&, const Matrix&)> seen(
            [](const Matrix& a, const Matrix& b) { return a.entries() < b.entries(); });
        std::uint64_t evals = 0, restart = 0, order = 0;
        auto visit = [&](const std::vector<std::size_t>& digits) {
            const Matrix m = detail::candidate_from_digits(digits, space, grid);
            auto s = detail::score(m, config.target);
            ++evals;
            if (s.violates() && seen.insert(m).second)
                found.push_back({order++, detail::to_finding(m, *s.strongest, config.target)});
            return s;
        };
        while (evals < config.max_evaluations) {
            auto cur = detail::random_digits(config.seed, restart++, entries, base);
            auto cur_score = visit(cur);
            bool moved = true;
            while (moved && evals < config.max_evaluations) {
                moved = false;
                for (std::size_t e = 0; e < entries && !moved && evals < config.max_evaluations; ++e)
                    for (int step : {-1, 1}) {
                        if ((step < 0 && cur[e] == 0) || (step > 0 && cur[e] + 1 == base)) continue;
                        auto next = cur;
                        next[e] = static_cast<std::size_t>(static_cast<long>(next[e]) + step);
                        auto s = visit(next);
                        if (detail::improves(s, cur_score)) {
                            cur = std::move(next);
                            cur_score = std::move(s);
                            moved = true;
                            break;
                        }
                        if (evals >= config.max_evaluations) break;
                    }
            }
        }
        result.evaluations = evals;
    } else {
        const std::uint64_t total = config.mode == SearchMode::exhaustive
                                        ? std::min(detail::grid_size(base, entries), config.max_evaluations)
                                        : config.max_evaluations;
        const unsigned jobs = std::max(1U, config.jobs);
        std::vector<std::vector<detail::Indexed>> partial(jobs);
        std::vector<std::exception_ptr> errors(jobs);
        auto work = [&](unsigned w) {
            try {
                const std::uint64_t chunk = (total + jobs - 1) / jobs;
                const std::uint64_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    const auto digits = config.mode == SearchMode::exhaustive
                                            ? detail::exhaustive_digits(i, entries, base)
                                            : detail::random_digits(config.seed, i, entries, base);
                    const Matrix m = detail::candidate_from_digits(digits, space, grid);
                    const auto s = detail::score(m, config.target);
                    if (s.violates()) partial[w].push_back({i, detail::to_finding(m, *s.strongest, config.target)});
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
            for (auto& t : threads) t.join();
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(found));
        if (config.mode == SearchMode::random) {
            // Same matrix drawn twice: keep the first draw.
            std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
            std::set<std::vector<Rational>> seen;
            std::erase_if(found, [&](const auto& f) { return !seen.insert(f.finding.side_matrix.entries()).second; });
        }
        result.evaluations = total;
    }

    detail::sort_findings(found);
    for (auto& f : found) result.findings.push_back(std::move(f.finding));
    return result;
}

/// Recomputes the finding through the polarization route and checks that
/// the same certificate and ratio come out.
inline bool verify_finding(const Finding& f) {
    try {
        const auto bodies = boxes_from_sides(f.side_matrix);
        if (f.side_matrix.rows() == 0 || f.side_matrix.cols() == 0) return false;
        for (const auto& e : f.side_matrix.entries())
            if (e.sign() < 0) return false;
        if (f.certificate.lhs.is_zero() || f.violation_ratio != violation_ratio(f.certificate)) return false;
        Report r;
        VolumePolynomial vp;
        if (f.target == SearchTarget::triple) {
            vp = triple_polynomial(bodies);
            r = gromov_triple_check(vp);
        } else {
            vp = volume_polynomial(BodyTuple(bodies));
            r = gromov_concavity(vp);
        }
        if (r.verdict != Verdict::fails || !reverify(f.certificate, vp)) return false;
        return std::find(r.certificates.begin(), r.certificates.end(), f.certificate) != r.certificates.end();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace mixvol
