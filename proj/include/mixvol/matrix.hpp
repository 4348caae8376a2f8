#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Rational fill = Rational(0))
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw DimensionError("matrix entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix diagonal(std::span<const Rational> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    const std::vector<Rational>& entries() const { return entries_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Square symmetric matrix; symmetry is checked on construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix m) : m_(std::move(m)) {
        if (!m_.is_square()) throw DimensionError("symmetric matrix must be square");
        if (!m_.is_symmetric()) throw DomainError("matrix is not symmetric");
    }
    SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : SymMatrix(Matrix(rows)) {}

    static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
    static SymMatrix diagonal(std::span<const Rational> d) { return SymMatrix(Matrix::diagonal(d)); }

    std::size_t dim() const { return m_.rows(); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const Matrix& matrix() const { return m_; }

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ + b.m_); }
    friend SymMatrix operator*(const Rational& s, const SymMatrix& a) { return SymMatrix(s * a.m_); }
    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    Matrix m_;
};

}  // namespace mixvol
