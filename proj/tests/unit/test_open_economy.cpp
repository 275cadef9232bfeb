#include "landspec/assumptions.hpp"
#include "landspec/errors.hpp"
#include "landspec/open_economy.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace landspec;
using namespace landspec::open;

namespace {

constexpr double phi_star0 = 3.8275893166652204;
constexpr double rx_p2 = 2.4260929867540226;

} // namespace

TEST(OpenBgp, ClosedFormAtZeroEpsilon)
{
    const OpenBgp b = solve_bgp(oracle::p2());
    const oracle::Bgp cf = oracle::open_closed_form(oracle::p2());
    EXPECT_NEAR(b.phi_star / cf.phi, 1.0, 1e-12);
    EXPECT_NEAR(b.gross_growth / rx_p2, 1.0, 1e-12);
    EXPECT_NEAR(b.phi_star, phi_star0, 1e-12);
    EXPECT_NEAR(b.phi_bar, 4.403025994248401, 1e-12);
    EXPECT_LE(b.residual, 1e-10 * std::max(1.0, b.phi_star));
    EXPECT_DOUBLE_EQ(b.land_gdp_ratio, b.phi_star);
    EXPECT_FALSE(b.landless);
    // Quoted rounded values.
    EXPECT_NEAR(b.phi_star, 3.8281, 1e-3);
    EXPECT_NEAR(b.gross_growth, 2.4261, 1e-4);
}

TEST(OpenBgp, ContinuousAtZeroEpsilon)
{
    const OpenBgp b0 = solve_bgp(oracle::p2());
    const OpenBgp b = solve_bgp(oracle::p2(1e-8));
    EXPECT_NEAR(b.phi_star, b0.phi_star, 1e-5);
    EXPECT_NEAR(b.gross_growth, b0.gross_growth, 1e-5);
}

TEST(OpenBgp, PositiveEpsilonGolden)
{
    const OpenBgp b = solve_bgp(oracle::p2(0.05));
    EXPECT_NEAR(b.phi_star, 3.8453132049590146, 1e-11);
    EXPECT_NEAR(b.gross_growth, 2.3513674734826355, 1e-11);
    EXPECT_GT(b.phi_star, phi_star0);
    const oracle::Bgp o = oracle::open_bgp(oracle::p2(0.05));
    EXPECT_NEAR(b.phi_star / o.phi, 1.0, 1e-12);
    EXPECT_NEAR(b.land_gdp_ratio, b.phi_star / (1 + 0.05 * 2.444050163747711), 1e-12);
}

TEST(OpenBgp, GrowthReturnIdentity)
{
    for (double eps : {1e-4, 0.01, 0.1, 1.0, 3.0}) {
        const OpenBgp b = solve_bgp(oracle::p2(eps));
        const double k = eps * std::pow(15.0, 0.33);
        EXPECT_NEAR(b.gross_growth, rx_p2 / (1 + k / b.phi_star), 1e-10) << eps;
        EXPECT_LT(b.phi_star, b.phi_bar);
        EXPECT_GT(b.phi_star, 0.0);
    }
}

TEST(OpenBgp, LandlessRootOnRequest)
{
    const OpenBgp b = solve_bgp(oracle::p2(), {Root::landless});
    EXPECT_TRUE(b.landless);
    EXPECT_EQ(b.phi_star, 0.0);
    EXPECT_NEAR(b.gross_growth, 18.563555124790543, 1e-10);
    EXPECT_THROW(solve_bgp(oracle::p2(0.1), {Root::landless}), NoEquilibrium);
}

TEST(OpenBgp, AboveEpsilonBarNoEquilibrium)
{
    EXPECT_THROW(solve_bgp(oracle::p2(3.6)), NoEquilibrium);
    EXPECT_NO_THROW(solve_bgp(oracle::p2(3.6), {Root::positive, false}));
}

TEST(OpenBgp, AssumptionViolationCarriesReport)
{
    auto p = oracle::p2();
    p.theta = 0.56;
    try {
        solve_bgp(p);
        FAIL();
    } catch (const AssumptionViolated& ex) {
        EXPECT_FALSE(ex.report().find(AssumptionId::A1)->holds);
    }
    p = oracle::p2();
    p.eta = 0.02;
    p.theta = 0.0;
    EXPECT_THROW(solve_bgp(p), AssumptionViolated);
}

TEST(OpenBgp, MatchesInverseMapOracleOnRandomDraws)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto p = oracle::draw_open(rng);
        p.epsilon = 2.0 * u(rng);
        OpenBgp b;
        try {
            b = solve_bgp(p, {Root::positive, false});
        } catch (const Error&) {
            FAIL() << "draw " << i;
        }
        const oracle::Bgp o = oracle::open_bgp(p);
        EXPECT_NEAR(b.phi_star / o.phi, 1.0, 1e-8) << i;
        EXPECT_NEAR(b.gross_growth / o.gross_growth, 1.0, 1e-8) << i;
    }
}

TEST(PhiMap, FixedPointAndIntercept)
{
    const auto p = oracle::p2(0.05);
    const OpenBgp b = solve_bgp(p);
    EXPECT_NEAR(phi_map(b.phi_star, p), b.phi_star, 1e-10);
    EXPECT_NEAR(phi_map(0.0, p), -0.12220250818738555, 1e-14);
    EXPECT_NEAR(phi_map(0.0, oracle::p2()), 0.0, 0.0);
}

TEST(PhiMap, BelowDiagonalLeftOfFixedPoint)
{
    const auto p = oracle::p2();
    EXPECT_LT(phi_map(phi_star0 / 2, p), phi_star0 / 2);
    EXPECT_GT(phi_map(phi_star0 * 1.05, p), phi_star0 * 1.05);
}

TEST(PhiMap, ConvexWithNegativeInterceptOnlyWhenProductive)
{
    for (double eps : {0.0, 0.05, 0.5}) {
        const auto p = oracle::p2(eps);
        const double bar = phi_bar(p);
        for (int i = 1; i < 99; ++i) {
            const double h = bar / 100;
            const double x = i * h;
            const double second = phi_map(x + h, p) - 2 * phi_map(x, p) + phi_map(x - h, p);
            EXPECT_GT(second, 0.0) << eps << " " << x;
        }
        if (eps > 0)
            EXPECT_LT(phi_map(0.0, p), 0.0);
        else
            EXPECT_EQ(phi_map(0.0, p), 0.0);
    }
}

TEST(PhiMap, DomainChecks)
{
    const auto p = oracle::p2();
    EXPECT_THROW(phi_map(phi_bar(p), p), DomainError);
    EXPECT_THROW(phi_map(-0.1, p), DomainError);
    EXPECT_THROW(growth_given_phi(phi_bar(p) * 1.01, p), DomainError);
}

TEST(GrowthGivenPhi, KnownPoints)
{
    const auto p = oracle::p2();
    EXPECT_NEAR(growth_given_phi(0.0, p), 18.563555124790543, 1e-10);
    EXPECT_NEAR(growth_given_phi(phi_star0, p), rx_p2, 1e-10);
    EXPECT_NEAR(growth_given_phi(std::nextafter(phi_bar(p), 0.0), p), 0.0, 1e-10);
    double prev = INFINITY;
    for (double x = 0; x < phi_bar(p); x += 0.1) {
        const double g = growth_given_phi(x, p);
        EXPECT_LT(g, prev);
        prev = g;
    }
}

TEST(EpsilonBar, BisectionRoot)
{
    const double e = epsilon_bar(oracle::p2());
    EXPECT_NEAR(e, 3.50401, 1e-5);
    const double g = solve_bgp(oracle::p2(e), {Root::positive, false}).gross_growth;
    EXPECT_NEAR(g, 0.8, 1e-8);
    EXPECT_EQ(epsilon_bar(oracle::p2(), 1.0), no_crossing);
}

TEST(EpsilonBar, FullDepreciationNeverCrosses)
{
    auto p = oracle::p2();
    p.delta = 1.0;
    p.theta = 0.3;
    EXPECT_EQ(epsilon_bar(p), no_crossing);
}

TEST(EpsilonBar, GrowthDecreasingInEpsilon)
{
    double prev = INFINITY;
    for (double eps = 0.0; eps < 3.5; eps += 0.05) {
        const double g = solve_bgp(oracle::p2(eps)).gross_growth;
        EXPECT_LT(g, prev);
        prev = g;
    }
}

TEST(Simulate, JumpPathIsGeometric)
{
    const auto path = simulate(oracle::p2(), 1.0, 5);
    ASSERT_EQ(path.size(), 6u);
    const double A = std::pow(15.0, 0.67);
    for (const auto& s : path) {
        EXPECT_NEAR(s.K / std::pow(rx_p2, s.t), 1.0, 1e-12);
        EXPECT_NEAR(s.P / (phi_star0 * A * s.K), 1.0, 1e-12);
        EXPECT_NEAR(s.phi, phi_star0, 1e-12);
        EXPECT_NEAR(s.w, 0.67 * A * s.K, 1e-12 * s.w);
        EXPECT_NEAR(s.Y, A * s.K, 1e-12 * s.Y);
    }
}

TEST(Simulate, ExplicitAtFixedPointMatchesJump)
{
    const auto p = oracle::p2(0.05);
    const OpenBgp b = solve_bgp(p);
    const auto jump = simulate(p, 2.0, 5);
    const auto expl = simulate(p, 2.0, 5, SimulationStart::at(b.phi_star));
    ASSERT_EQ(jump.size(), expl.size());
    for (std::size_t i = 0; i < jump.size(); ++i) {
        EXPECT_NEAR(expl[i].K / jump[i].K, 1.0, 1e-9);
        EXPECT_NEAR(expl[i].phi, jump[i].phi, 1e-9);
    }
}

TEST(Simulate, PerturbedStartDivergesAcrossPhiBar)
{
    const auto p = oracle::p2();
    try {
        simulate(p, 1.0, 100, SimulationStart::at(phi_star0 * 1.01));
        FAIL() << "expected divergence";
    } catch (const PathDiverged& ex) {
        const auto& part = ex.partial();
        ASSERT_GE(part.size(), 2u);
        for (std::size_t i = 1; i < part.size(); ++i) EXPECT_GT(part[i].phi, part[i - 1].phi);
    }
}

TEST(Simulate, RejectsBadInputs)
{
    EXPECT_THROW(simulate(oracle::p2(), 0.0, 5), std::invalid_argument);
    EXPECT_THROW(simulate(oracle::p2(), 1.0, 0), std::invalid_argument);
}

TEST(Decompose, IdentityIsZero)
{
    const Decomposition d = decompose(oracle::p2(0.01), oracle::p2(0.01));
    EXPECT_EQ(d.pe_leverage, 0.0);
    EXPECT_EQ(d.pe_downpayment, 0.0);
    EXPECT_EQ(d.ge_speculation, 0.0);
    EXPECT_EQ(d.total, 0.0);
}

TEST(Decompose, LandCollateralCrowdsOut)
{
    auto changed = oracle::p2(1e-4);
    changed.theta_x = 0.62;
    const Decomposition d = decompose(oracle::p2(1e-4), changed);
    EXPECT_EQ(d.pe_leverage, 0.0);
    EXPECT_GT(d.pe_downpayment, 0.0);
    EXPECT_LT(d.ge_speculation, 0.0);
    EXPECT_LT(d.total, 0.0);
    EXPECT_NEAR(d.pe_leverage + d.pe_downpayment + d.ge_speculation, d.total, 1e-12);
    const double direct = solve_bgp(changed).gross_growth - solve_bgp(oracle::p2(1e-4)).gross_growth;
    EXPECT_NEAR(d.total, direct, 1e-12);
}

TEST(Decompose, CapitalCollateralRaisesGrowth)
{
    auto changed = oracle::p2(1e-4);
    changed.theta = 0.51;
    const Decomposition d = decompose(oracle::p2(1e-4), changed);
    EXPECT_GT(d.total, 0.0);
    EXPECT_NEAR(d.pe_leverage + d.pe_downpayment + d.ge_speculation, d.total, 1e-12);
}

TEST(WagePath, HigherCapitalCollateralRaisesWages)
{
    auto hi = oracle::p2(1e-6);
    hi.theta += 0.01;
    const auto base = simulate(oracle::p2(1e-6), 1.0, 20);
    const auto more = simulate(hi, 1.0, 20);
    for (std::size_t t = 1; t < base.size(); ++t) EXPECT_GT(more[t].w, base[t].w) << t;
}

TEST(TemporaryShock, NullShockIsBaseline)
{
    const auto paths = temporary_shock(oracle::p2(0.01), 0.01, 3, 1.0, 10, Belief::believed_permanent);
    ASSERT_EQ(paths.shocked.size(), paths.baseline.size());
    for (std::size_t i = 0; i < paths.shocked.size(); ++i) {
        EXPECT_EQ(paths.shocked[i].K, paths.baseline[i].K);
        EXPECT_EQ(paths.shocked[i].P, paths.baseline[i].P);
    }
}

TEST(TemporaryShock, BothBeliefsLeaveLastingCapitalLoss)
{
    const auto perm = temporary_shock(oracle::p2(0.01), 0.05, 3, 1.0, 12, Belief::believed_permanent);
    const auto temp = temporary_shock(oracle::p2(0.01), 0.05, 3, 1.0, 12, Belief::anticipated_temporary);
    for (int t = 0; t < 3; ++t) EXPECT_EQ(perm.shocked[t].P, perm.baseline[t].P);
    EXPECT_GT(perm.shocked[3].P, perm.baseline[3].P);
    EXPECT_GT(temp.shocked[3].P, temp.baseline[3].P);
    EXPECT_LT(temp.shocked[3].P, perm.shocked[3].P);
    for (std::size_t t = 4; t < perm.shocked.size(); ++t) {
        EXPECT_LT(perm.shocked[t].K, perm.baseline[t].K) << t;
        EXPECT_LT(temp.shocked[t].K, temp.baseline[t].K) << t;
    }
}

TEST(TemporaryShock, AnticipatedPriceSatisfiesArbitrage)
{
    const auto p = oracle::p2(0.01);
    const auto temp = temporary_shock(p, 0.05, 3, 1.0, 8, Belief::anticipated_temporary);
    const oracle::Open o(p, 1.55);
    const double lhs = o.rx * temp.shocked[3].P;
    const double rhs = 0.05 * p.a * temp.shocked[4].K + temp.shocked[4].P;
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
}

TEST(TemporaryShock, RejectsBadTiming)
{
    EXPECT_THROW(temporary_shock(oracle::p2(0.01), 0.05, 0, 1.0, 8, Belief::believed_permanent),
                 std::invalid_argument);
    EXPECT_THROW(temporary_shock(oracle::p2(0.01), 0.05, 8, 1.0, 8, Belief::believed_permanent),
                 std::invalid_argument);
    EXPECT_THROW(temporary_shock(oracle::p2(0.01), 0.0, 3, 1.0, 8, Belief::believed_permanent),
                 std::invalid_argument);
}
