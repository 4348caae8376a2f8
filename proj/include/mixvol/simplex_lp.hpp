#pragma once

// Exact two-phase primal simplex over the rationals for
//     maximize c·x  subject to  A·x = b,  x >= 0.
// Bland's lowest-index rule for both entering and leaving variables, so the
// method terminates on degenerate problems.

#include <cstddef>
#include <optional>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/matrix.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational optimum;       // meaningful when status == optimal
    RationalVector solution;  // witness x, likewise
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows + 1, cols + 1), m_(rows), n_(cols), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
    Rational& rhs(std::size_t r) { return t_(r, n_); }
    Rational& obj(std::size_t c) { return t_(m_, c); }
    std::vector<std::size_t>& basis() { return basis_; }
    std::size_t rows() const { return m_; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = Rational(1) / t_(r, c);
        for (std::size_t j = 0; j <= n_; ++j) t_(r, j) *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_(i, c).is_zero()) continue;
            const Rational f = t_(i, c);
            for (std::size_t j = 0; j <= n_; ++j)
                if (!t_(r, j).is_zero()) t_(i, j) -= f * t_(r, j);
        }
        basis_[r] = c;
    }

    // Objective row holds reduced costs z_j - c_j; optimal when all >= 0 over
    // the allowed columns.  Returns false when unbounded.
    bool optimize(std::size_t allowed_cols) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (obj(j).sign() < 0) { enter = j; break; }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (at(i, *enter).sign() <= 0) continue;
                Rational ratio = rhs(i) / at(i, *enter);
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void drop_row(std::size_t r) {
        Matrix nt(m_, n_ + 1);
        for (std::size_t i = 0, k = 0; i <= m_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j <= n_; ++j) nt(k, j) = t_(i, j);
            ++k;
        }
        t_ = std::move(nt);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

private:
    Matrix t_;
    std::size_t m_, n_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult simplex_max(std::span<const Rational> objective, const Matrix& eq_lhs,
                            std::span<const Rational> eq_rhs) {
    const std::size_t m = eq_lhs.rows(), n = eq_lhs.cols();
    if (objective.size() != n) throw DimensionError("objective length does not match variable count");
    if (eq_rhs.size() != m) throw DimensionError("rhs length does not match constraint count");

    // Phase 1: artificial variable per row, maximize -(sum of artificials).
    detail::Tableau tab(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = eq_rhs[i].sign() < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? -eq_lhs(i, j) : eq_lhs(i, j);
        tab.at(i, n + i) = 1;
        tab.rhs(i) = flip ? -eq_rhs[i] : eq_rhs[i];
        tab.basis()[i] = n + i;
    }
    for (std::size_t j = 0; j <= n + m; ++j) {
        if (j >= n && j < n + m) continue;
        Rational s;
        for (std::size_t i = 0; i < m; ++i) s -= (j == n + m) ? tab.rhs(i) : tab.at(i, j);
        tab.obj(j) = s;
    }
    tab.optimize(n + m);
    if (tab.obj(n + m).sign() != 0) return {LpStatus::infeasible, {}, {}};

    // Drive zero-level artificials out of the basis; rows with no original
    // column left are redundant.
    for (std::size_t i = tab.rows(); i-- > 0;) {
        if (tab.basis()[i] < n) continue;
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n; ++j)
            if (!tab.at(i, j).is_zero()) { col = j; break; }
        if (col) tab.pivot(i, *col);
        else tab.drop_row(i);
    }

    // Phase 2 objective row: z_j - c_j with basic columns eliminated.
    for (std::size_t j = 0; j <= n + m; ++j) tab.obj(j) = (j < n) ? -objective[j] : Rational(0);
    for (std::size_t i = 0; i < tab.rows(); ++i) {
        const std::size_t b = tab.basis()[i];
        const Rational f = tab.obj(b);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j <= n + m; ++j) {
            const Rational& v = (j == n + m) ? tab.rhs(i) : tab.at(i, j);
            if (!v.is_zero()) tab.obj(j) -= f * v;
        }
    }
    if (!tab.optimize(n)) return {LpStatus::unbounded, {}, {}};

    LpResult res{LpStatus::optimal, tab.obj(n + m), RationalVector(n)};
    for (std::size_t i = 0; i < tab.rows(); ++i) res.solution[tab.basis()[i]] = tab.rhs(i);
    return res;
}

}  // namespace mixvol
