#include "he3oam/clebsch_gordan.hpp"
#include "he3oam/errors.hpp"

#include <gtest/gtest.h>

using namespace he3oam;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

SqrtRational cg2(int j1, int m1, int j2, int m2, int J, int M) {
    return clebsch_gordan(H(j1), H(m1), H(j2), H(m2), H(J), H(M));
}

SqrtRational root(int sign, Rational r) { return SqrtRational(sign, std::move(r)); }

} // namespace

// Arguments below are twice-values.
TEST(ClebschGordan, SpecExamples) {
    EXPECT_EQ(cg2(2, 2, 1, -1, 3, 1), root(1, Rational(1, 3)));
    EXPECT_EQ(cg2(2, 2, 1, 1, 3, 3), root(1, 1));
    EXPECT_EQ(cg2(2, -2, 1, 1, 1, -1), root(-1, Rational(2, 3)));
    EXPECT_TRUE(cg2(2, 0, 1, 1, 3, 3).is_zero());
}

// The four rows of the coupled OAM-spin table: (m_L, mu) -> components on j' = 3/2 and 1/2.
TEST(ClebschGordan, CoupledNeutronStateTable) {
    struct Row {
        int m_l, mu, m_mid;
        SqrtRational quartet, doublet;
    };
    const Row rows[] = {
        {2, 1, 3, root(1, 1), SqrtRational()},
        {2, -1, 1, root(1, Rational(1, 3)), root(1, Rational(2, 3))},
        {-2, 1, -1, root(1, Rational(1, 3)), root(-1, Rational(2, 3))},
        {-2, -1, -3, root(1, 1), SqrtRational()},
    };
    for (const auto& r : rows) {
        EXPECT_EQ(cg2(2, r.m_l, 1, r.mu, 3, r.m_mid), r.quartet);
        if (std::abs(r.m_mid) <= 1) {
            EXPECT_EQ(cg2(2, r.m_l, 1, r.mu, 1, r.m_mid), r.doublet);
        }
    }
}

TEST(ClebschGordan, ZeroOutsideSelectionRules) {
    EXPECT_TRUE(cg2(2, 0, 2, 0, 6, 0).is_zero()); // J > j1 + j2
    EXPECT_TRUE(cg2(4, 0, 0, 0, 2, 0).is_zero()); // J < |j1 - j2|
    EXPECT_TRUE(cg2(2, 0, 2, 0, 2, 0).is_zero()); // <1 0; 1 0 | 1 0> vanishes by the sum itself
    EXPECT_TRUE(cg2(1, 1, 1, 1, 1, 1).is_zero()); // j1 + j2 + J half-integral
}

TEST(ClebschGordan, RejectsInvalidPairs) {
    EXPECT_THROW(cg2(2, 1, 1, 1, 3, 2), InvalidQuantumNumber);  // m1 half-integral for integer j1
    EXPECT_THROW(cg2(1, 3, 1, -1, 2, 2), InvalidQuantumNumber); // |m1| > j1
    EXPECT_THROW(cg2(-2, 0, 1, 1, 1, 1), InvalidQuantumNumber);
}

// Independent route: the textbook closed forms for coupling j1 with 1/2,
//   <j1 m-1/2; 1/2 +1/2 | j1+-1/2 m> = +- sqrt((j1 +- m + 1/2) / (2 j1 + 1))
//   <j1 m+1/2; 1/2 -1/2 | j1+-1/2 m> =    sqrt((j1 -+ m + 1/2) / (2 j1 + 1))
TEST(ClebschGordan, MatchesSpinHalfCouplingFormulas) {
    int cases = 0;
    for (int tj1 = 1; tj1 <= 12; ++tj1) {
        const Rational j1(tj1, 2);
        for (int sign : {+1, -1}) {
            const int tJ = tj1 + sign;
            for (int tm = -tJ; tm <= tJ; tm += 2) {
                const Rational m(tm, 2);
                const Rational den = 2 * j1 + 1;
                if (std::abs(tm - 1) <= tj1) {
                    const Rational r = (j1 + sign * m + Rational(1, 2)) / den;
                    EXPECT_EQ(cg2(tj1, tm - 1, 1, 1, tJ, tm), SqrtRational(r == 0 ? 0 : sign, r));
                    ++cases;
                }
                if (std::abs(tm + 1) <= tj1) {
                    const Rational r = (j1 - sign * m + Rational(1, 2)) / den;
                    EXPECT_EQ(cg2(tj1, tm + 1, 1, -1, tJ, tm), SqrtRational(r == 0 ? 0 : 1, r));
                    ++cases;
                }
            }
        }
    }
    EXPECT_GT(cases, 100);
}

// <j m; j -m | 0 0> = (-1)^(j-m) / sqrt(2j+1)
TEST(ClebschGordan, CouplingToZero) {
    for (int tj = 0; tj <= 12; ++tj)
        for (int tm = -tj; tm <= tj; tm += 2)
            EXPECT_EQ(cg2(tj, tm, tj, -tm, 0, 0),
                      SqrtRational(((tj - tm) / 2) % 2 == 0 ? 1 : -1, Rational(1, tj + 1)));
}

TEST(ClebschGordan, LargeArgumentsStayExact) {
    // Stretched state at j = 10 and a completeness check in a single (J, M) block.
    EXPECT_EQ(cg2(20, 20, 20, 20, 40, 40), root(1, 1));
    Rational total = 0;
    for (int m1 = -20; m1 <= 20; m1 += 2) {
        const int m2 = 0 - m1;
        if (std::abs(m2) <= 18) total += cg2(20, m1, 18, m2, 22, 0).squared();
    }
    EXPECT_EQ(total, 1);
}

TEST(Factorial, BigValues) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
    EXPECT_THROW(factorial(-1), DomainError);
}
