#include "landspec_cli/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using landspec::cli::run;

namespace {

const fs::path scenarios = LANDSPEC_SCENARIO_DIR;

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        ::unsetenv("LANDSPEC_OUTDIR");
        dir = fs::temp_directory_path() / ("landspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    int call(std::vector<std::string> args)
    {
        out.str("");
        err.str("");
        return run(args, out, err);
    }

    std::string scenario(const char* name) const { return (scenarios / name).string(); }

    fs::path dir;
    std::ostringstream out;
    std::ostringstream err;
};

} // namespace

TEST_F(Cli, SolveWritesTablesAndManifest)
{
    ASSERT_EQ(call({"solve", "--scenario", scenario("open_reference.cfg"), "--out", dir.string()}), 0) << err.str();
    EXPECT_TRUE(fs::exists(dir / "bgp.csv"));
    EXPECT_TRUE(fs::exists(dir / "assumptions.csv"));
    EXPECT_TRUE(fs::exists(dir / "map.csv.manifest"));
    const auto manifest = slurp(dir / "bgp.csv.manifest");
    EXPECT_NE(manifest.find("command"), std::string::npos);
    EXPECT_NE(manifest.find("seedless"), std::string::npos);
    EXPECT_NE(slurp(dir / "bgp.csv").find("3.8275893166652"), std::string::npos);
}

TEST_F(Cli, MonetarySolve)
{
    ASSERT_EQ(call({"solve", "--economy", "monetary", "--scenario", scenario("monetary_reference.cfg"), "--out", dir.string()}), 0)
        << err.str();
    EXPECT_NE(slurp(dir / "bgp.csv").find("1.98741266448"), std::string::npos);
}

TEST_F(Cli, EnvironmentOverridesOut)
{
    ::setenv("LANDSPEC_OUTDIR", dir.string().c_str(), 1);
    const auto other = dir / "ignored";
    EXPECT_EQ(call({"solve", "--scenario", scenario("open_reference.cfg"), "--out", other.string()}), 0);
    ::unsetenv("LANDSPEC_OUTDIR");
    EXPECT_TRUE(fs::exists(dir / "bgp.csv"));
    EXPECT_FALSE(fs::exists(other));
}

TEST_F(Cli, SweepIsByteIdenticalAcrossThreadCounts)
{
    const auto a = dir / "a";
    const auto b = dir / "b";
    ASSERT_EQ(call({"sweep", "--scenario", scenario("open_reference.cfg"), "--wrt", "theta_x", "--threads", "1", "--out", a.string()}), 0);
    ASSERT_EQ(call({"sweep", "--scenario", scenario("open_reference.cfg"), "--wrt", "theta_x", "--threads", "3", "--out", b.string()}), 0);
    const auto text = slurp(a / "sweep.csv");
    EXPECT_EQ(text, slurp(b / "sweep.csv"));
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 201);
}

TEST_F(Cli, MonetarySweepWritesLevels)
{
    ASSERT_EQ(call({"sweep", "--economy", "monetary", "--scenario", scenario("monetary_reference.cfg"), "--wrt", "mu", "--steps", "11",
                    "--out", dir.string()}),
              0);
    EXPECT_TRUE(fs::exists(dir / "sweep.csv"));
    EXPECT_TRUE(fs::exists(dir / "monetary_sweep.csv"));
}

TEST_F(Cli, SimulateVariants)
{
    EXPECT_EQ(call({"simulate", "--scenario", scenario("open_reference.cfg"), "--periods", "10", "--out", (dir / "p").string()}), 0);
    EXPECT_EQ(call({"simulate", "--scenario", scenario("open_reference.cfg"), "--shock-eps", "0.05", "--shock-at", "3", "--belief",
                    "anticipated_temporary", "--out", (dir / "s").string()}),
              0)
        << err.str();
    EXPECT_EQ(slurp(dir / "s" / "path.csv").rfind("branch,", 0), 0u);
    EXPECT_EQ(call({"simulate", "--scenario", scenario("open_unbalanced.cfg"), "--n0", "0.01", "--out", (dir / "u").string()}), 0)
        << err.str();
    EXPECT_EQ(slurp(dir / "u" / "path.csv").rfind("t,phi,n,g,P_over_V", 0), 0u);
    EXPECT_EQ(call({"simulate", "--economy", "monetary", "--scenario", scenario("monetary_reference.cfg"), "--out", (dir / "m").string()}),
              0);
}

TEST_F(Cli, CheckPassesOnReference)
{
    EXPECT_EQ(call({"check", "--scenario", scenario("open_reference.cfg"), "--out", dir.string()}), 0) << out.str();
    EXPECT_TRUE(fs::exists(dir / "check.csv"));
}

TEST_F(Cli, ExitCodes)
{
    fs::create_directories(dir);
    EXPECT_EQ(call({}), 1);
    EXPECT_EQ(call({"solve", "--scenario", (dir / "missing.cfg").string()}), 1);
    EXPECT_EQ(call({"solve", "--scenario", scenario("open_reference.cfg"), "--bogus"}), 1);

    const auto empty = dir / "empty.cfg";
    std::ofstream(empty).close();
    EXPECT_EQ(call({"solve", "--scenario", empty.string(), "--out", dir.string()}), 1);

    // theta high enough that theta * Rc >= R breaks the borrowing assumptions
    auto text = slurp(scenarios / "open_reference.cfg");
    text.replace(text.find("theta = 0.5"), 11, "theta = 0.56");
    const auto bad = dir / "bad.cfg";
    std::ofstream(bad) << text;
    EXPECT_EQ(call({"solve", "--scenario", bad.string(), "--out", dir.string()}), 3);
    EXPECT_EQ(call({"check", "--scenario", bad.string(), "--out", dir.string()}), 4);

    auto far = slurp(scenarios / "open_reference.cfg");
    far.replace(far.find("epsilon = 0"), 11, "epsilon = 4");
    const auto floor = dir / "floor.cfg";
    std::ofstream(floor) << far;
    EXPECT_EQ(call({"solve", "--scenario", floor.string(), "--out", dir.string()}), 2);
}
