#include "he3oam/errors.hpp"
#include "he3oam/half_int.hpp"
#include "he3oam/quad_rational.hpp"
#include "he3oam/rational.hpp"
#include "he3oam/sqrt_rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace he3oam;

TEST(Rational, ParsesFractionsDecimalsAndExponents) {
    EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("+3"), Rational(3));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("1."), Rational(1));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("1E+2"), Rational(100));
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
}

// cpp_int's string constructor treats a leading zero as octal.
TEST(Rational, LeadingZerosAreDecimal) {
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("010/020"), Rational(1, 2));
    EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
    EXPECT_EQ(parse_rational("00"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "-", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "0x10", "1/2/3", "."})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ExactSquareRoots) {
    Rational root;
    EXPECT_TRUE(rational_sqrt(Rational(4, 9), &root));
    EXPECT_EQ(root, Rational(2, 3));
    EXPECT_FALSE(rational_sqrt(Rational(1, 3), &root));
    EXPECT_FALSE(rational_sqrt(Rational(-1), &root));
}

TEST(HalfInt, ParseAndRender) {
    EXPECT_EQ(HalfInt::parse("1/2").twice(), 1);
    EXPECT_EQ(HalfInt::parse("-3/2").twice(), -3);
    EXPECT_EQ(HalfInt::parse("+1").twice(), 2);
    EXPECT_EQ(HalfInt::parse("0.5").twice(), 1);
    EXPECT_THROW(HalfInt::parse("1/3"), ParseError);
    EXPECT_EQ(HalfInt::half(-3).str(), "-3/2");
    EXPECT_EQ(HalfInt::integer(1).str(true), "+1");
}

TEST(HalfInt, PairValidity) {
    EXPECT_TRUE(is_valid_pair(HalfInt::half(3), HalfInt::half(-1)));
    EXPECT_FALSE(is_valid_pair(HalfInt::integer(1), HalfInt::half(1)));
    EXPECT_FALSE(is_valid_pair(HalfInt::half(1), HalfInt::half(3)));
    EXPECT_FALSE(is_valid_pair(HalfInt::integer(-1), HalfInt::integer(0)));
    EXPECT_THROW(require_valid_pair(HalfInt::integer(1), HalfInt::half(1), "x"), InvalidQuantumNumber);
}

TEST(SqrtRational, InvariantsAndRendering) {
    EXPECT_TRUE(SqrtRational(1, 0).is_zero());
    EXPECT_EQ(SqrtRational(0, 5).radicand(), 0);
    EXPECT_THROW(SqrtRational(1, Rational(-1)), DomainError);
    EXPECT_EQ(SqrtRational(1, Rational(1, 3)).str(), "+sqrt(1/3)");
    EXPECT_EQ(SqrtRational(-1, Rational(4, 9)).str(), "-2/3");
    EXPECT_EQ(SqrtRational::from_rational(Rational(-2, 3)), SqrtRational(-1, Rational(4, 9)));
    EXPECT_EQ(to_decimal(SqrtRational(1, Rational(1, 3))), "0.577350269189626");
}

TEST(SqrtProduct, ExamplesStayInField) {
    const SqrtRational third(1, Rational(1, 3)), two_thirds(1, Rational(2, 3));
    EXPECT_EQ(sqrt_product(third, third), QuadRational(Rational(1, 3), 0));
    EXPECT_EQ(sqrt_product(third, two_thirds), QuadRational(0, Rational(1, 3)));
    EXPECT_EQ(sqrt_product(-two_thirds, two_thirds), QuadRational(Rational(-2, 3), 0));
    EXPECT_TRUE(sqrt_product(SqrtRational(), third).is_zero());
}

TEST(SqrtProduct, RejectsRadicandOutsideField) {
    EXPECT_THROW(sqrt_product(SqrtRational(1, 1), SqrtRational(1, 3)), UnsupportedRadicand);
    EXPECT_THROW(sqrt_product(SqrtRational(1, Rational(1, 6)), SqrtRational(1, 1)), UnsupportedRadicand);
}

TEST(QuadRational, ExactSignOfMixedTerms) {
    // 3 - 2 sqrt2 > 0, 1 - sqrt2 < 0, 6 - 4 sqrt2 > 0
    EXPECT_EQ(QuadRational(3, -2).sign(), 1);
    EXPECT_EQ(QuadRational(1, -1).sign(), -1);
    EXPECT_EQ(QuadRational(6, -4).sign(), 1);
    EXPECT_EQ(QuadRational(-3, 2).sign(), -1);
    EXPECT_EQ(QuadRational().sign(), 0);
    EXPECT_LT(QuadRational(1, -1), QuadRational(0));
}

TEST(QuadRational, Rendering) {
    EXPECT_EQ(QuadRational(Rational(1, 2), Rational(-1, 6)).str(), "1/2 - 1/6*sqrt(2)");
    EXPECT_EQ(QuadRational(0, 1).str(), "sqrt(2)");
    EXPECT_EQ(QuadRational(0, -2).str(), "-2*sqrt(2)");
    EXPECT_EQ(QuadRational(Rational(1, 3)).str(), "1/3");
    EXPECT_EQ(to_decimal(QuadRational(0, 1)), "1.4142135623731");
    EXPECT_EQ(to_decimal(QuadRational(Rational(1, 2), Rational(1, 3))), "0.971404520791032");
    EXPECT_EQ(to_decimal(QuadRational()), "0");
}

// Field axioms on random elements, checked against long double arithmetic
// and against each other exactly.
TEST(QuadRational, RandomFieldIdentities) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 30);
    auto draw = [&] { return QuadRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = draw(), y = draw(), z = draw();
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x - x, QuadRational());
        if (!y.is_zero()) {
            EXPECT_EQ((x / y) * y, x);
        }
        const long double approx = x.to_double() * static_cast<long double>(y.to_double());
        EXPECT_NEAR(static_cast<double>(approx), (x * y).to_double(), 1e-9 * (1 + std::abs(static_cast<double>(approx))));
        const double v = x.to_double();
        if (std::abs(v) > 1e-12) {
            EXPECT_EQ(x.sign(), v > 0 ? 1 : -1);
        }
    }
}

TEST(QuadRational, DivisionByZeroThrows) {
    EXPECT_THROW(QuadRational(1) / QuadRational(), DomainError);
}
