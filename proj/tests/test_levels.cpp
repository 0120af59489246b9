#include "he3oam/errors.hpp"
#include "he3oam/levels.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace he3oam;

TEST(Levels, BuiltinTable) {
    const auto& levels = builtin_levels();
    ASSERT_EQ(levels.size(), 6u);
    EXPECT_TRUE(levels[0].is_entry);
    EXPECT_EQ(levels[0].energy_keV, 20578);
    EXPECT_EQ(capture_entry().energy_keV, 20578);
    EXPECT_EQ(levels[3].spin_parity(), "0-");
    EXPECT_EQ(levels[3].energy_keV, 21010);
    EXPECT_EQ(levels[4].spin_parity(), "2-");
    EXPECT_EQ(levels[4].width_note, "broad");
    for (const auto& r : levels) EXPECT_EQ(r.isospin, 0);
}

TEST(Levels, EmbeddedDataMatchesFile) {
    std::ifstream in(HE3OAM_LEVELS_CSV);
    ASSERT_TRUE(in) << HE3OAM_LEVELS_CSV;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), builtin_levels_csv());
    EXPECT_EQ(parse_levels_csv(ss.str()), builtin_levels());
}

TEST(Levels, Detunings) {
    EXPECT_DOUBLE_EQ(channel_detuning(Channel::ordinary(0)), 0.368);
    EXPECT_DOUBLE_EQ(channel_detuning(Channel::oam(0)), -0.432);
    EXPECT_DOUBLE_EQ(channel_detuning(Channel::oam(1)), -3.672);
    EXPECT_DOUBLE_EQ(channel_detuning(Channel::oam(2)), -1.262);
    EXPECT_THROW(channel_detuning(Channel::oam(3)), NotFound);
}

TEST(Levels, ParitySelection) {
    const auto ordinary = parity_selection(Mode::ordinary);
    ASSERT_EQ(ordinary.size(), 2u);
    EXPECT_EQ(ordinary[1].label(), "1+");
    const auto oam = parity_selection(Mode::oam);
    ASSERT_EQ(oam.size(), 3u);
    EXPECT_EQ(oam[2].label(), "2-");
}

TEST(Levels, ParseErrors) {
    const std::string header = "energy_keV,J,parity,T,kind,width_note\n";
    EXPECT_THROW(parse_levels_csv("energy,J\n1,0\n"), ParseError);
    EXPECT_THROW(parse_levels_csv(header + "20210,0,?,0,level,\n"), ParseError);
    EXPECT_THROW(parse_levels_csv(header + "20210,1/3,+,0,level,\n"), ParseError);
    EXPECT_THROW(parse_levels_csv(header + "abc,0,+,0,level,\n"), ParseError);
    EXPECT_NO_THROW(parse_levels_csv("# comment\n\n" + header + "20210,0,+,0,level,\n"));
}

TEST(Kinematics, PublishedValuesPass) {
    const auto report = check_kinematics({});
    EXPECT_TRUE(report.passed());
    ASSERT_EQ(report.checks.size(), 2u);
    EXPECT_DOUBLE_EQ(report.checks[0].observed, 764.0);
}

TEST(Kinematics, ImbalancedValuesFail) {
    EXPECT_FALSE(check_kinematics({764, 573, 200}).passed());
    // energies sum correctly but the split violates momentum balance
    EXPECT_FALSE(check_kinematics({764, 382, 382}).passed());
    EXPECT_TRUE(check_kinematics({764, 573.5, 190.5}).passed());
}
