#include "landspec/errors.hpp"
#include "landspec/scenario_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace landspec;

namespace {

const char* reference = R"(# comment line
theta = 0.5
theta_x = 0.6   # trailing comment
r = 0.55
eta = 0.4
alpha = 0.33
a = 15
delta = 0.2
epsilon = 0
)";

} // namespace

TEST(ScenarioIo, ParsesReference)
{
    const auto p = parse_scenario(reference);
    EXPECT_EQ(p.theta, 0.5);
    EXPECT_EQ(p.theta_x, 0.6);
    ASSERT_TRUE(p.gross_r);
    EXPECT_DOUBLE_EQ(*p.gross_r, 1.55);
    EXPECT_FALSE(p.gross_mu);
    EXPECT_EQ(p.a, 15.0);
    EXPECT_EQ(p.saving_mode, SavingMode::linear_old_only);
}

TEST(ScenarioIo, RoundTrip)
{
    auto p = parse_scenario(reference);
    p.epsilon = 0.123456789012345678;
    p.d = 0.02;
    p.saving_mode = SavingMode::log_utility;
    const auto q = parse_scenario(format_scenario(p));
    EXPECT_EQ(q.epsilon, p.epsilon);
    EXPECT_EQ(*q.gross_r, *p.gross_r);
    EXPECT_EQ(q.d, p.d);
    EXPECT_EQ(q.saving_mode, SavingMode::log_utility);
    EXPECT_EQ(format_scenario(q), format_scenario(p));
}

TEST(ScenarioIo, Rejections)
{
    EXPECT_THROW(parse_scenario(""), ParseError);
    EXPECT_THROW(parse_scenario("# only a comment\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "theta = 0.4\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "bogus = 1\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "psi = 1\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "mu = abc\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "saving_mode = other\n"), ParseError);
    EXPECT_THROW(parse_scenario("theta = 0.5\n"), ParseError);
    EXPECT_THROW(parse_scenario(std::string(reference) + "no equals sign\n"), ParseError);
}

TEST(ScenarioIo, OutOfRangeReportedAsParseError)
{
    std::string text = reference;
    text.replace(text.find("alpha = 0.33"), 12, "alpha = 1.50");
    EXPECT_THROW(parse_scenario(text), ParseError);
}

TEST(ScenarioIo, ErrorCarriesLine)
{
    try {
        parse_scenario("theta = 0.5\ntheta = 0.5\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(ScenarioIo, LoadFromFile)
{
    const auto path = std::filesystem::temp_directory_path() / "landspec_scenario_test.cfg";
    std::ofstream(path) << reference;
    EXPECT_EQ(load_scenario(path).theta_x, 0.6);
    std::filesystem::remove(path);
    EXPECT_THROW(load_scenario(path), ParseError);
}
