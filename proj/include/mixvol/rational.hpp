#pragma once

// Exact rational scalar backed by GMP.  Every value is kept in canonical
// form: positive denominator, numerator and denominator coprime.

#include <gmp.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mixvol/errors.hpp"

namespace mixvol {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(unsigned v) : q_(v) {}       // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DomainError("zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (q != 0).  Whitespace is not accepted.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational");
        std::string s(text);
        auto valid_int = [](std::string_view t) {
            if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
            throw ParseError("malformed rational: '" + s + "'");
        if (num.front() == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Canonical "p" or "p/q".
    std::string str() const { return q_.get_str(10); }

    double to_double() const { return q_.get_d(); }

    /// Decimal approximation with `digits` significant digits ("%g" style).
    std::string to_decimal(int digits = 12) const {
        mpf_class f(q_, 512);
        char* buf = nullptr;
        gmp_asprintf(&buf, "%.*Fg", digits, f.get_mpf_t());
        std::string out(buf);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(buf, out.size() + 1);
        return out;
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned long exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

/// Canonical string followed by a 12-significant-digit approximation, e.g.
/// "4/9 (≈ 0.444444444444)".  Integers print bare.
inline std::string describe(const Rational& r) {
    if (r.is_integer()) return r.str();
    return r.str() + " (≈ " + r.to_decimal(12) + ")";
}

using RationalVector = std::vector<Rational>;

}  // namespace mixvol

template <>
struct std::hash<mixvol::Rational> {
    std::size_t operator()(const mixvol::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
