#include "landspec/comparative_statics.hpp"

#include "landspec/assumptions.hpp"
#include "landspec/errors.hpp"
#include "landspec/monetary.hpp"
#include "landspec/open_economy.hpp"
#include "landspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace landspec::statics {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Solved {
    double gross_growth;
    double phi_star;
    double gross_r;
    double credit_gdp;
    double land_gdp;
};

/// Solves without the investment floor; the caller decides feasibility.
Solved solve_any(const ScenarioParams& p, Economy economy)
{
    if (economy == Economy::open) {
        const open::OpenBgp b = open::solve_bgp(p, {open::Root::positive, false});
        return {b.gross_growth, b.phi_star, p.rate(), nan, b.land_gdp_ratio};
    }
    const monetary::MonetaryBgp b = monetary::solve_bgp_monetary(p);
    const double k = p.epsilon * std::pow(p.a, p.alpha);
    return {b.gross_growth, b.phi_star, b.gross_r, b.credit_gdp, b.phi_star / (1.0 + k)};
}

Solved solve_feasible(const ScenarioParams& p, Economy economy)
{
    const Solved s = solve_any(p, economy);
    if (s.gross_growth < 1.0 - p.delta) throw NoEquilibrium("1+g* is below 1-delta");
    return s;
}

double pick(const Solved& s, Target target)
{
    switch (target) {
    case Target::gross_growth: return s.gross_growth;
    case Target::phi_star: return s.phi_star;
    case Target::gross_r: return s.gross_r;
    case Target::credit_gdp: return s.credit_gdp;
    case Target::land_gdp: return s.land_gdp;
    }
    return nan;
}

void check_wrt(Economy economy, Param wrt)
{
    if (economy == Economy::monetary && wrt == Param::r)
        throw std::invalid_argument("r is endogenous in the monetary economy");
    if (economy == Economy::open && wrt == Param::mu)
        throw std::invalid_argument("mu is not a parameter of the open economy");
}

std::string reason_of(const std::exception& ex)
{
    if (const auto* av = dynamic_cast<const AssumptionViolated*>(&ex))
    {
        std::string ids = av->report().failures();
        std::replace(ids.begin(), ids.end(), ',', '+');
        return "assumption_violated:" + ids;
    }
    if (dynamic_cast<const RegionTooNarrow*>(&ex)) return "region_too_narrow";
    if (dynamic_cast<const NoEquilibrium*>(&ex)) return "no_equilibrium";
    if (dynamic_cast<const RootNotBracketed*>(&ex)) return "root_not_bracketed";
    if (dynamic_cast<const DomainError*>(&ex)) return "domain_error";
    return "error";
}

bool feasible_at(const ScenarioParams& params, Economy economy, double eps)
{
    ScenarioParams q = params;
    q.epsilon = eps;
    try {
        solve_feasible(q, economy);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

Sign sign_of(double value)
{
    if (value > sign_tolerance) return Sign::pos;
    if (value < -sign_tolerance) return Sign::neg;
    return Sign::zero;
}

std::string_view to_string(Sign sign)
{
    switch (sign) {
    case Sign::neg: return "neg";
    case Sign::zero: return "zero";
    case Sign::pos: return "pos";
    }
    return "?";
}

std::string_view to_string(Target target)
{
    switch (target) {
    case Target::gross_growth: return "gross_growth";
    case Target::phi_star: return "phi_star";
    case Target::gross_r: return "gross_r";
    case Target::credit_gdp: return "credit_gdp";
    case Target::land_gdp: return "land_gdp";
    }
    return "?";
}

double evaluate(const ScenarioParams& params, Economy economy, Target target)
{
    if (economy == Economy::open && target == Target::credit_gdp)
        throw std::invalid_argument("credit_gdp is defined for the monetary economy only");
    return pick(solve_feasible(params, economy), target);
}

DerivativeEstimate derivative(const ScenarioParams& params, Economy economy, Param wrt, std::optional<double> h,
                              Target target)
{
    check_wrt(economy, wrt);
    const double x = get(params, wrt);
    double step = h ? *h : 1e-5 * std::max(1.0, std::abs(x));
    auto at = [&](double value) {
        ScenarioParams q = params;
        set(q, wrt, value);
        return evaluate(q, economy, target);
    };
    for (;;) {
        if (!(step >= 1e-10))
            throw RegionTooNarrow("no admissible step around " + std::string(to_string(wrt)) + " = " +
                                  std::to_string(x));
        try {
            const double full = (at(x + step) - at(x - step)) / (2.0 * step);
            const double half = (at(x + 0.5 * step) - at(x - 0.5 * step)) / step;
            return {(4.0 * half - full) / 3.0, full, half, step};
        } catch (const Error&) {
            step /= 10.0;
        }
    }
}

std::vector<double> linear_grid(double from, double to, int steps)
{
    std::vector<double> grid;
    if (steps < 1) return grid;
    if (steps == 1) return {from};
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid.push_back(from + (to - from) * i / (steps - 1));
    grid.back() = to;
    return grid;
}

std::vector<SweepRecord> sign_map(const ScenarioParams& params, Economy economy, Param wrt,
                                  std::span<const double> eps_grid, unsigned threads)
{
    check_wrt(economy, wrt);
    std::vector<SweepRecord> out(eps_grid.size());

    auto fill = [&](std::size_t i) {
        ScenarioParams q = params;
        q.epsilon = eps_grid[i];
        SweepRecord& rec = out[i];
        rec.epsilon = eps_grid[i];
        rec.param_values = {{"theta", q.theta}, {"theta_x", q.theta_x}};
        if (economy == Economy::open && q.gross_r) rec.param_values["r"] = *q.gross_r - 1.0;
        if (economy == Economy::monetary && q.gross_mu) rec.param_values["mu"] = *q.gross_mu - 1.0;
        rec.derivative_target = Target::gross_growth;
        rec.wrt = wrt;
        rec.g_star = rec.phi_star = rec.gross_r = rec.derivative = nan;
        rec.sign = Sign::zero;
        rec.feasible = false;
        try {
            const Solved s = solve_any(q, economy);
            rec.g_star = s.gross_growth - 1.0;
            rec.phi_star = s.phi_star;
            rec.gross_r = s.gross_r;
            if (s.gross_growth < 1.0 - q.delta) {
                rec.reason = "below_investment_floor";
                return;
            }
            rec.derivative = derivative(q, economy, wrt).value;
            rec.sign = sign_of(rec.derivative);
            rec.feasible = true;
        } catch (const std::exception& ex) {
            rec.reason = reason_of(ex);
        }
    };

    const std::size_t n = out.size();
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fill(i);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += workers) fill(i);
            });
    }
    std::stable_sort(out.begin(), out.end(), [](const SweepRecord& a, const SweepRecord& b) { return a.epsilon < b.epsilon; });
    return out;
}

double feasible_epsilon_ceiling(const ScenarioParams& params, Economy economy, double ceiling)
{
    if (economy == Economy::open) return std::min(open::epsilon_bar(params, ceiling), ceiling);
    if (!feasible_at(params, economy, 0.0)) return 0.0;
    const std::vector<double> scan = linear_grid(0.0, ceiling, 201);
    for (std::size_t i = 1; i < scan.size(); ++i) {
        if (feasible_at(params, economy, scan[i])) continue;
        auto gap = [&](double eps) { return feasible_at(params, economy, eps) ? 1.0 : -1.0; };
        return roots::bisect(gap, scan[i - 1], scan[i], 1e-10);
    }
    return ceiling;
}

std::vector<double> default_grid(const ScenarioParams& params, Economy economy)
{
    const double top = std::min(0.99 * feasible_epsilon_ceiling(params, economy), 1.0);
    return linear_grid(0.0, top, 200);
}

double critical_epsilon(const ScenarioParams& params, Economy economy, Param wrt, double ceiling)
{
    check_wrt(economy, wrt);
    const double feasible = feasible_epsilon_ceiling(params, economy, ceiling);
    double lo = 1e-6;
    double hi = feasible < ceiling ? feasible * (1.0 - 1e-6) : ceiling;
    if (!(hi > lo)) return no_flip;

    auto slope = [&](double eps) {
        ScenarioParams q = params;
        q.epsilon = eps;
        return derivative(q, economy, wrt).value;
    };
    const Sign s_lo = sign_of(slope(lo));
    std::optional<Sign> s_hi;
    for (int attempt = 0; attempt < 60 && !s_hi; ++attempt) {
        try {
            s_hi = sign_of(slope(hi));
        } catch (const Error&) {
            hi = lo + 0.99 * (hi - lo);
        }
    }
    if (!s_hi || *s_hi == s_lo) return no_flip;

    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (sign_of(slope(mid)) == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool PropositionReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const PropositionCheck& c) { return c.pass; });
}

namespace {

enum class Expect { neg, pos };

void add_sign(PropositionReport& rep, const std::string& id, const ScenarioParams& p, Economy economy, Param wrt,
              Target target, Expect expect)
{
    const std::string claim = "d " + std::string(to_string(target)) + " / d " + std::string(to_string(wrt)) +
                              (expect == Expect::pos ? " > 0" : " < 0");
    try {
        const double d = derivative(p, economy, wrt, std::nullopt, target).value;
        const bool pass = expect == Expect::pos ? sign_of(d) == Sign::pos : sign_of(d) == Sign::neg;
        rep.checks.push_back({id, claim, d, true, pass});
    } catch (const std::exception&) {
        rep.checks.push_back({id, claim, nan, true, false});
    }
}

void add_sign_rule(PropositionReport& rep, const std::string& id, const ScenarioParams& p, Economy economy,
                   Param wrt, double governing)
{
    const std::string claim = "sign d gross_growth / d " + std::string(to_string(wrt)) + " follows the collateral gap";
    try {
        const double d = derivative(p, economy, wrt).value;
        const bool pass = governing == 0.0 ? sign_of(d) == Sign::zero : sign_of(d) == sign_of(governing);
        rep.checks.push_back({id, claim, d, true, pass});
    } catch (const std::exception&) {
        rep.checks.push_back({id, claim, nan, true, false});
    }
}

} // namespace

PropositionReport proposition_suite(const std::optional<ScenarioParams>& open_params,
                                    const std::optional<ScenarioParams>& monetary_params)
{
    PropositionReport rep;
    constexpr double eps = 1e-6;
    const auto G = Target::gross_growth;
    const auto Phi = Target::phi_star;
    const auto R = Target::gross_r;

    if (open_params) {
        ScenarioParams p = *open_params;
        p.epsilon = eps;
        const auto O = Economy::open;
        add_sign(rep, "open.growth.theta_x", p, O, Param::theta_x, G, Expect::neg);
        add_sign(rep, "open.growth.theta", p, O, Param::theta, G, Expect::pos);
        add_sign_rule(rep, "open.growth.r_rule", p, O, Param::r, p.theta_x - p.theta);
        add_sign(rep, "open.phi.theta_x", p, O, Param::theta_x, Phi, Expect::pos);
        add_sign(rep, "open.phi.r", p, O, Param::r, Phi, Expect::neg);
        add_sign(rep, "open.phi.theta", p, O, Param::theta, Phi, Expect::pos);
        add_sign(rep, "open.phi.epsilon", p, O, Param::epsilon, Phi, Expect::pos);
    }

    if (monetary_params) {
        ScenarioParams p = *monetary_params;
        p.epsilon = eps;
        const auto M = Economy::monetary;
        add_sign(rep, "monetary.growth.theta_x", p, M, Param::theta_x, G, Expect::neg);
        add_sign(rep, "monetary.phi.theta_x", p, M, Param::theta_x, Phi, Expect::pos);
        add_sign(rep, "monetary.rate.theta_x", p, M, Param::theta_x, R, Expect::neg);
        add_sign(rep, "monetary.growth.theta", p, M, Param::theta, G, Expect::pos);
        add_sign(rep, "monetary.phi.theta", p, M, Param::theta, Phi, Expect::pos);
        add_sign(rep, "monetary.rate.theta", p, M, Param::theta, R, Expect::pos);
        add_sign_rule(rep, "monetary.growth.mu_rule", p, M, Param::mu, p.theta - p.theta_x);
        add_sign(rep, "monetary.phi.mu", p, M, Param::mu, Phi, Expect::pos);
        add_sign(rep, "monetary.rate.mu", p, M, Param::mu, R, Expect::neg);

        {
            const std::string claim = "landless d gross_growth / d mu > 0";
            const bool applicable = p.theta > 0.0;
            try {
                const double mu = get(p, Param::mu);
                const double h = 1e-5 * std::max(1.0, mu);
                ScenarioParams up = p;
                ScenarioParams down = p;
                set(up, Param::mu, mu + h);
                set(down, Param::mu, std::max(0.0, mu - h));
                const double d = (monetary::solve_landless(up).gross_growth -
                                  monetary::solve_landless(down).gross_growth) /
                                 (get(up, Param::mu) - get(down, Param::mu));
                rep.checks.push_back({"landless.growth.mu", claim, d, applicable, !applicable || sign_of(d) == Sign::pos});
            } catch (const std::exception&) {
                rep.checks.push_back({"landless.growth.mu", claim, nan, applicable, false});
            }
        }

        {
            const std::string claim = "Rc > 1+g* > 1+r*";
            const bool applicable = p.theta_x > p.theta && p.money_growth() > 1.0;
            try {
                const monetary::MonetaryBgp b = monetary::solve_bgp_monetary(p);
                const auto& o = b.ordering;
                const bool ordered = o.Rc > o.gross_growth && o.gross_growth > o.gross_r;
                rep.checks.push_back({"monetary.return_ordering", claim, std::min(o.Rc - o.gross_growth, o.gross_growth - o.gross_r),
                                      applicable, !applicable || ordered});
            } catch (const std::exception&) {
                rep.checks.push_back({"monetary.return_ordering", claim, nan, applicable, false});
            }
        }

        add_sign(rep, "monetary.credit.theta", p, M, Param::theta, Target::credit_gdp, Expect::pos);
        add_sign(rep, "monetary.credit.theta_x", p, M, Param::theta_x, Target::credit_gdp, Expect::pos);
        add_sign(rep, "monetary.credit.mu", p, M, Param::mu, Target::credit_gdp, Expect::pos);
    }
    return rep;
}

} // namespace landspec::statics
