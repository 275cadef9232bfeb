#include "landspec/open_economy.hpp"

#include "landspec/assumptions.hpp"
#include "landspec/roots.hpp"
#include "open_terms.hpp"

#include <cmath>
#include <stdexcept>

namespace landspec::open {

using detail::OpenTerms;
using detail::open_terms;

namespace {

void require_a1_a2(const ScenarioParams& p)
{
    AssumptionReport report = check_assumptions(p, Economy::open);
    for (const auto& r : report.records)
        if ((r.id == AssumptionId::A1 || r.id == AssumptionId::A2) && !r.holds)
            throw AssumptionViolated(std::move(report));
}

double growth_checked(const OpenTerms& o, double phi)
{
    if (!(phi < o.phi_bar))
        throw DomainError("phi = " + std::to_string(phi) + " is not below phi_bar = " + std::to_string(o.phi_bar));
    return o.growth(phi);
}

double map_checked(const OpenTerms& o, double phi)
{
    if (!(phi >= 0.0)) throw DomainError("phi must be non-negative");
    return o.rx * phi / growth_checked(o, phi) - o.k;
}

/// Positive root of L dp phi^2 - Y1 phi - k L share = 0 without cancellation.
double positive_root(const OpenTerms& o)
{
    const double a2 = o.L * o.dp;
    const double y1 = o.L * o.share - o.L * o.dp * o.k - o.rx;
    const double c0 = o.k * o.L * o.share;
    const double disc = std::sqrt(y1 * y1 + 4.0 * a2 * c0);
    if (y1 >= 0.0) return (y1 + disc) / (2.0 * a2);
    return 2.0 * c0 / (disc - y1);
}

PathState state(const ScenarioParams& p, const OpenTerms& o, int t, double K, double P, double g, double eps)
{
    const double AK = o.A * K;
    return {t, K, P, P / AK, g, (1.0 - p.alpha) * AK, (1.0 + eps * std::pow(p.a, p.alpha)) * AK};
}

} // namespace

double phi_map(double phi, const ScenarioParams& params)
{
    return map_checked(open_terms(params), phi);
}

double growth_given_phi(double phi, const ScenarioParams& params)
{
    return growth_checked(open_terms(params), phi);
}

double phi_bar(const ScenarioParams& params)
{
    return open_terms(params).phi_bar;
}

OpenBgp solve_bgp(const ScenarioParams& params, const BgpOptions& options)
{
    require_a1_a2(params);
    const OpenTerms o = open_terms(params);

    OpenBgp bgp{};
    bgp.phi_bar = o.phi_bar;
    if (options.root == Root::landless) {
        if (o.k != 0.0) throw NoEquilibrium("the landless root exists only for epsilon = 0");
        bgp.phi_star = 0.0;
        bgp.landless = true;
    } else {
        bgp.phi_star = positive_root(o);
    }
    bgp.gross_growth = o.growth(bgp.phi_star);
    if (options.enforce_investment_floor && bgp.gross_growth < 1.0 - params.delta)
        throw NoEquilibrium("1+g* = " + std::to_string(bgp.gross_growth) + " is below 1-delta");
    bgp.residual = std::abs(bgp.phi_star - map_checked(o, bgp.phi_star));
    bgp.land_gdp_ratio = bgp.phi_star / (1.0 + o.k);
    return bgp;
}

double epsilon_bar(const ScenarioParams& params, double ceiling)
{
    const double floor = 1.0 - params.delta;
    auto gap = [&](double eps) {
        ScenarioParams q = params;
        q.epsilon = eps;
        return solve_bgp(q, {Root::positive, false}).gross_growth - floor;
    };
    if (gap(ceiling) > 0.0) return no_crossing;
    if (gap(0.0) <= 0.0) return 0.0;
    return roots::bisect(gap, 0.0, ceiling, 1e-10);
}

std::vector<PathState> simulate(const ScenarioParams& params, double K0, int T, SimulationStart start)
{
    if (!(K0 > 0.0)) throw std::invalid_argument("K0 must be positive");
    if (T < 1) throw std::invalid_argument("T must be at least 1");
    const OpenTerms o = open_terms(params);
    std::vector<PathState> path;
    path.reserve(static_cast<std::size_t>(T) + 1);

    if (start.mode == SimulationStart::Mode::jump_to_bgp) {
        const OpenBgp bgp = solve_bgp(params);
        double K = K0;
        for (int t = 0; t <= T; ++t) {
            path.push_back(state(params, o, t, K, bgp.phi_star * o.A * K, bgp.gross_growth - 1.0, params.epsilon));
            K *= bgp.gross_growth;
        }
        return path;
    }

    require_a1_a2(params);
    const double dividend = params.epsilon * params.a;
    double K = K0;
    double P = start.phi0 * o.A * K0;
    for (int t = 0; t <= T; ++t) {
        const double phi = P / (o.A * K);
        if (!(phi >= 0.0 && phi < o.phi_bar))
            throw PathDiverged("phi left [0, phi_bar) at t = " + std::to_string(t), std::move(path));
        const double K_next = o.leverage * (o.share * o.A * K - o.dp * P);
        path.push_back(state(params, o, t, K, P, K_next / K - 1.0, params.epsilon));
        P = o.rx * P - dividend * K_next;
        K = K_next;
    }
    return path;
}

Decomposition decompose(const ScenarioParams& base, const ScenarioParams& changed)
{
    const OpenBgp b0 = solve_bgp(base);
    const OpenBgp b1 = solve_bgp(changed);
    const OpenTerms o0 = open_terms(base);
    const OpenTerms o1 = open_terms(changed);

    const double g0 = o0.L * (o0.share - o0.dp * b0.phi_star);
    const double g1 = o1.L * (o1.share - o0.dp * b0.phi_star);
    const double g2 = o1.L * (o1.share - o1.dp * b0.phi_star);
    const double g3 = o1.L * (o1.share - o1.dp * b1.phi_star);
    return {g1 - g0, g2 - g1, g3 - g2, g3 - g0};
}

ShockPaths temporary_shock(const ScenarioParams& params, double eps_high, int s, double K0, int T, Belief belief)
{
    if (!(eps_high >= params.epsilon)) throw std::invalid_argument("eps_high must not be below epsilon");
    if (!(s > 0 && s < T)) throw std::invalid_argument("shock date must satisfy 0 < s < T");

    ShockPaths out;
    out.baseline = simulate(params, K0, T);
    if (eps_high == params.epsilon) {
        out.shocked = out.baseline;
        return out;
    }

    ScenarioParams high = params;
    high.epsilon = eps_high;
    const OpenBgp base = solve_bgp(params);
    const OpenTerms o = open_terms(params);
    const double Ks = out.baseline[static_cast<std::size_t>(s)].K;
    auto next_capital = [&](double P) { return o.leverage * (o.share * o.A * Ks - o.dp * P); };

    double Ps = 0.0;
    if (belief == Belief::believed_permanent) {
        Ps = solve_bgp(high).phi_star * o.A * Ks;
    } else {
        // Land bought at s earns the shocked rent at s+1 and is resold on the baseline path.
        auto arbitrage = [&](double P) {
            const double K1 = next_capital(P);
            return o.rx * P - eps_high * params.a * K1 - base.phi_star * o.A * K1;
        };
        Ps = roots::solve(arbitrage, 0.0, o.phi_bar * o.A * Ks);
    }

    out.shocked.assign(out.baseline.begin(), out.baseline.begin() + s);
    const double K1 = next_capital(Ps);
    out.shocked.push_back(state(params, o, s, Ks, Ps, K1 / Ks - 1.0, params.epsilon));
    double K = K1;
    for (int t = s + 1; t <= T; ++t) {
        const double eps = t == s + 1 ? eps_high : params.epsilon;
        out.shocked.push_back(state(params, o, t, K, base.phi_star * o.A * K, base.gross_growth - 1.0, eps));
        K *= base.gross_growth;
    }
    return out;
}

} // namespace landspec::open
