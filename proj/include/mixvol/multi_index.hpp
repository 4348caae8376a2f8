#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mixvol/errors.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

/// Exponent vector (i_1, ..., i_k); |I| = sum of entries.
struct MultiIndex {
    std::vector<unsigned> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<unsigned> e) : entries(e) {}

    std::size_t size() const { return entries.size(); }
    unsigned total() const { return std::accumulate(entries.begin(), entries.end(), 0U); }
    unsigned operator[](std::size_t i) const { return entries[i]; }
    unsigned& operator[](std::size_t i) { return entries[i]; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
        return s + ")";
    }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Lattice points of { I in Z_{>=0}^k : |I| = n }, in ascending lexicographic order.
class DiscreteSimplex {
public:
    DiscreteSimplex(std::size_t k, unsigned n) : k_(k), n_(n) {
        if (k == 0) throw DimensionError("discrete simplex needs k >= 1");
        MultiIndex cur(std::vector<unsigned>(k, 0));
        fill(cur, 0, n);
    }

    std::size_t k() const { return k_; }
    unsigned n() const { return n_; }
    const std::vector<MultiIndex>& points() const& { return points_; }
    std::vector<MultiIndex> points() && { return std::move(points_); }
    std::size_t size() const { return points_.size(); }

    bool contains(const MultiIndex& i) const { return i.size() == k_ && i.total() == n_; }

private:
    void fill(MultiIndex& cur, std::size_t pos, unsigned remaining) {
        if (pos + 1 == k_) {
            cur[pos] = remaining;
            points_.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            fill(cur, pos + 1, remaining - v);
        }
    }

    std::size_t k_;
    unsigned n_;
    std::vector<MultiIndex> points_;
};

/// n! / (i_1! ... i_k!) with n = |I|.
inline Rational multinomial(const MultiIndex& idx) {
    Rational r = factorial(idx.total());
    for (unsigned e : idx.entries) r /= factorial(e);
    return r;
}

/// Homogeneous degree-n polynomial in k variables stored through its
/// normalized coefficients: P(l) = sum_I multinomial(n; I) * c_I * l^I.
class VolumePolynomial {
public:
    VolumePolynomial() = default;
    VolumePolynomial(std::size_t k, unsigned n) : k_(k), n_(n) {}

    std::size_t k() const { return k_; }
    unsigned n() const { return n_; }

    void set(const MultiIndex& idx, Rational value) {
        if (idx.size() != k_ || idx.total() != n_)
            throw DimensionError("index " + idx.str() + " is not a point of the discrete simplex");
        coeffs_[idx] = std::move(value);
    }

    const Rational& at(const MultiIndex& idx) const {
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) throw DimensionError("no coefficient at index " + idx.str());
        return it->second;
    }
    bool contains(const MultiIndex& idx) const { return coeffs_.contains(idx); }

    const std::map<MultiIndex, Rational>& coefficients() const { return coeffs_; }

    /// True when the keys are exactly the discrete simplex points.
    bool complete() const { return coeffs_.size() == DiscreteSimplex(k_, n_).size(); }

    Rational evaluate(std::span<const Rational> lambda) const {
        if (lambda.size() != k_) throw DimensionError("evaluation point has wrong length");
        Rational total;
        for (const auto& [idx, c] : coeffs_) {
            if (c.is_zero()) continue;
            Rational term = multinomial(idx) * c;
            for (std::size_t j = 0; j < k_; ++j) term *= pow(lambda[j], idx[j]);
            total += term;
        }
        return total;
    }

    friend bool operator==(const VolumePolynomial&, const VolumePolynomial&) = default;

private:
    std::size_t k_ = 0;
    unsigned n_ = 0;
    std::map<MultiIndex, Rational> coeffs_;
};

}  // namespace mixvol
