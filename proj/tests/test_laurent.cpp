#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "webkup/bigint.hpp"
#include "webkup/laurent.hpp"

using namespace webkup;
using webkup::test::q;

TEST(BigInt, SmallArithmetic) {
    EXPECT_EQ(BigInt(7) * BigInt(-6), BigInt(-42));
    EXPECT_EQ(BigInt(-7) / BigInt(2), BigInt(-3));
    EXPECT_EQ(BigInt(-7) % BigInt(2), BigInt(-1));
    EXPECT_TRUE(BigInt(0).is_zero());
}

TEST(BigInt, PromotesOnOverflowAndDemotes) {
    BigInt big(std::numeric_limits<long long>::max());
    big += BigInt(1);
    EXPECT_FALSE(big.fits_int64());
    EXPECT_EQ(big.to_string(), "9223372036854775808");
    big -= BigInt(1);
    EXPECT_TRUE(big.fits_int64());
    EXPECT_EQ(big.to_int64(), std::numeric_limits<long long>::max());
}

TEST(BigInt, FactorialMatchesDecimal) {
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    EXPECT_EQ(f, BigInt("265252859812191058636308480000000"));
    for (int i = 30; i >= 2; --i) f /= BigInt(i);
    EXPECT_EQ(f, BigInt(1));
}

TEST(BigInt, OrderIsTotal) {
    BigInt a("-100000000000000000000"), b(-5), c("100000000000000000000");
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    EXPECT_EQ(-a, c);
}

TEST(Laurent, QuantumIntegers) {
    EXPECT_EQ(quantum_int(3), q(2) + q(0) + q(-2));
    EXPECT_EQ(quantum_int(0), LaurentPoly());
    EXPECT_EQ(quantum_int(2), q(1) + q(-1));
    EXPECT_EQ(quantum_int(-2), -quantum_int(2));
    for (int a = 0; a <= 12; ++a) {
        EXPECT_TRUE(quantum_int(a).is_bar_invariant());
        EXPECT_EQ(quantum_int(a).at_one(), BigInt(a));
    }
}

TEST(Laurent, QuantumBinomialExamples) {
    EXPECT_EQ(quantum_binomial(2, 1), q(1) + q(-1));
    EXPECT_EQ(quantum_binomial(3, 3), LaurentPoly(1));
    LaurentPoly oracle = exact_divide(quantum_factorial(4), quantum_factorial(2) * quantum_factorial(2));
    EXPECT_EQ(quantum_binomial(4, 2), oracle);
    EXPECT_EQ(quantum_binomial(4, 2), q(4) + q(2) + q(0, 2) + q(-2) + q(-4));
}

TEST(Laurent, BinomialRecursionAgrees) {
    for (int a = 0; a <= 10; ++a) {
        BigInt c(1);
        for (int b = 0; b <= a; ++b) {
            LaurentPoly v = quantum_binomial(a, b);
            EXPECT_EQ(v, quantum_binomial_recursive(a, b)) << a << " " << b;
            EXPECT_TRUE(v.is_nonnegative());
            EXPECT_EQ(v.at_one(), c);
            c = c * BigInt(a - b) / BigInt(b + 1);
        }
    }
}

TEST(Laurent, NegativeTopBinomialSatisfiesPascal) {
    for (int a = -6; a <= 6; ++a)
        for (int b = 1; b <= 5; ++b) {
            LaurentPoly rhs = quantum_binomial(a - 1, b).shifted(b) + quantum_binomial(a - 1, b - 1).shifted(b - a);
            EXPECT_EQ(quantum_binomial(a, b), rhs) << a << " " << b;
        }
}

TEST(Laurent, BarExamples) {
    EXPECT_EQ(bar(q(2) + q(0)), q(-2) + q(0));
    EXPECT_EQ(bar(quantum_int(3)), quantum_int(3));
    EXPECT_EQ(bar(q(3) + q(-1, -2)), q(-3) + q(1, -2));
}

TEST(Laurent, RingAxiomsOnSamples) {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng), c = test::random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, LaurentPoly());
        EXPECT_EQ(bar(a * b), bar(a) * bar(b));
        EXPECT_EQ(bar(bar(a)), a);
        for (const auto& t : (a * b).terms()) EXPECT_FALSE(t.coeff.is_zero());
    }
}

TEST(Laurent, QuantumProductsAgainstSchoolbook) {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) {
            LaurentPoly school;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) school.add_monomial(a - 1 - 2 * i + b - 1 - 2 * j, BigInt(1));
            EXPECT_EQ(quantum_int(a) * quantum_int(b), school);
        }
}

TEST(Laurent, DivisionRecoversFactors) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
    EXPECT_THROW(exact_divide(q(1) + q(0), q(1) + q(-1, -1) + q(0, 3)), InexactDivision);
}

TEST(Laurent, DivisionRemainderIdentity) {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = test::random_poly(rng), b = test::random_poly(rng, 4, 3, 1);
        if (b.is_zero()) continue;
        if (b.terms().back().coeff != BigInt(1) && b.terms().back().coeff != BigInt(-1)) continue;
        DivisionResult r = divide(a, b);
        EXPECT_EQ(r.quotient * b + r.remainder, a);
    }
}

TEST(Laurent, TextRoundtrip) {
    EXPECT_EQ(quantum_int(3).to_string(), "q^2 + 1 + q^-2");
    EXPECT_EQ((quantum_int(2) * quantum_int(3)).to_string(), "q^3 + 2*q + 2*q^-1 + q^-3");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = test::random_poly(rng);
        EXPECT_EQ(LaurentPoly::parse(a.to_string()), a) << a.to_string();
    }
}

TEST(Laurent, BigCoefficients) {
    LaurentPoly p = LaurentPoly(1);
    for (int i = 0; i < 40; ++i) p *= q(1) + q(-1);
    EXPECT_EQ(p.coefficient(0), BigInt("137846528820"));
    LaurentPoly r = p;
    for (int i = 0; i < 40; ++i) r = exact_divide(r, q(1) + q(-1));
    EXPECT_EQ(r, LaurentPoly(1));
    LaurentPoly s = LaurentPoly(1);
    for (int i = 0; i < 80; ++i) s *= q(1) + q(-1);
    EXPECT_EQ(s.coefficient(0), BigInt("107507208733336176461620"));
}
