#include <gtest/gtest.h>

#include "mixvol/rational.hpp"
#include "support.hpp"

using namespace mixvol;

TEST(Rational, ParsesCanonicalForms) {
    EXPECT_EQ(Rational::parse("4/9"), Rational(4, 9));
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/5").str(), "2");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational::parse("+3").str(), "3");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", " 1", "1//2"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, NegativeDenominatorIsNormalized) {
    const Rational r(3, -6);
    EXPECT_EQ(r.str(), "-1/2");
    EXPECT_GT(r.denominator(), 0);
    EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, StaysCanonicalUnderArithmetic) {
    mixvol::testing::Gen g(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.rational(50, 30), b = g.rational(50, 30);
        for (const Rational& r : {a + b, a - b, a * b}) {
            mpz_class gcd;
            const mpz_class num = r.numerator();
            mpz_gcd(gcd.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
            EXPECT_GT(r.denominator(), 0);
            EXPECT_EQ(gcd, 1);
            EXPECT_EQ(Rational::parse(r.str()), r);
        }
    }
}

TEST(Rational, DecimalApproximation) {
    EXPECT_EQ(Rational(4, 9).to_decimal(12), "0.444444444444");
    EXPECT_EQ(describe(Rational(4, 9)), "4/9 (≈ 0.444444444444)");
    EXPECT_EQ(describe(Rational(1)), "1");
    EXPECT_EQ(Rational(-1, 3).to_decimal(3), "-0.333");
}

TEST(Rational, PowAndFactorial) {
    EXPECT_EQ(pow(Rational(4, 9), 3), Rational(64, 729));
    EXPECT_EQ(pow(Rational(-2, 3), 0), Rational(1));
    EXPECT_EQ(factorial(0), Rational(1));
    EXPECT_EQ(factorial(6), Rational(720));
    EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}
