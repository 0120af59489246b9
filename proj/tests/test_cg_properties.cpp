#include "cg_property_suite.hpp"

#include <gtest/gtest.h>

TEST(ClebschGordanProperties, UnitarityAndSignSymmetryUpToTwo) {
    const auto tally = he3oam::testing::check_cg_properties(4);
    EXPECT_EQ(tally.failures, 0) << tally.first_failure;
    EXPECT_GE(tally.cases(), 500);
    EXPECT_GT(tally.orthonormality, 0);
    EXPECT_GT(tally.completeness, 0);
    EXPECT_GT(tally.symmetry, 0);
}

TEST(ClebschGordanProperties, UnitarityUpToThree) {
    const auto tally = he3oam::testing::check_cg_properties(6);
    EXPECT_EQ(tally.failures, 0) << tally.first_failure;
}
