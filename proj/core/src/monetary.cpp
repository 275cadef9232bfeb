#include "landspec/monetary.hpp"

#include "landspec/constants.hpp"
#include "landspec/errors.hpp"
#include "landspec/roots.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace landspec::monetary {

namespace {

struct Terms {
    DerivedConstants c;
    double k;
    double m;    ///< 1+mu
    double down; ///< 1 - theta_x (1+mu)
    double kc;   ///< Rc (1-theta) / (1-theta_x)
    double money_slope;
};

Terms terms(const ScenarioParams& p)
{
    Terms t{};
    t.c = derive_constants(p, Economy::monetary);
    t.k = p.epsilon * t.c.a_pow_alpha;
    t.m = p.money_growth();
    t.down = 1.0 - p.theta_x * t.m;
    t.kc = t.c.Rc * (1.0 - p.theta) / (1.0 - p.theta_x);
    t.money_slope = t.c.saving_rate * (1.0 - p.eta) * t.c.a_pow_alpha;
    return t;
}

struct Flow {
    double rx;
    double growth; ///< K_{t+1} / K_t
};

Flow flow(const ScenarioParams& p, const Terms& t, double phi, double gross_r)
{
    const RateTerms rt = rate_terms(t.c.Rc, p.theta, p.theta_x, gross_r);
    return {rt.rx, t.c.A * rt.capital_leverage * (t.c.income_share - rt.land_downpayment * phi)};
}

/// Young cohort's savings left for money, per unit of A K.
double brace(const Terms& t, double e, double phi, double growth)
{
    return t.c.wage_saving_share + t.money_slope * e - growth / t.c.A - phi;
}

} // namespace

double Quadratic::relative_residual(double phi) const
{
    const double scale = std::abs(q2 * phi * phi) + std::abs(q1 * phi) + std::abs(q0);
    const double value = std::abs((*this)(phi));
    return scale > 0.0 ? value / scale : value;
}

Quadratic steady_state_quadratic(const ScenarioParams& params)
{
    const Terms t = terms(params);
    const double A = t.c.A;
    const double tm = params.theta_x * t.m;
    Quadratic q{};
    q.q2 = A * t.down;
    q.q1 = -t.c.income_share * A - A * tm * t.k + A * t.k * t.down + t.kc * t.down;
    q.q0 = -t.k * (t.c.income_share * A + A * tm * t.k + t.kc * tm);
    return q;
}

MonetaryBgp solve_bgp_monetary(const ScenarioParams& params)
{
    validate(params);
    const Terms t = terms(params);
    AssumptionReport report = check_assumptions(params, Economy::monetary);
    if (const auto* a4 = report.find(AssumptionId::A4); a4 && !a4->holds) throw AssumptionViolated(std::move(report));
    if (!(t.down > 0.0)) throw NoEquilibrium("theta_x (1+mu) must be below 1");

    const Quadratic q = steady_state_quadratic(params);
    const double disc = std::sqrt(q.q1 * q.q1 - 4.0 * q.q2 * q.q0);
    const double phi = q.q1 <= 0.0 ? (-q.q1 + disc) / (2.0 * q.q2) : -2.0 * q.q0 / (q.q1 + disc);
    if (!(phi > 0.0) || !std::isfinite(phi)) throw NoEquilibrium("no positive land value solves the steady state");

    const double spread = 1.0 + t.k / phi;
    const double gross_r = t.c.Rc / (1.0 - params.theta_x) *
                           ((1.0 - params.theta) / (t.m * spread) - (params.theta_x - params.theta));
    report = check_assumptions(params, Economy::monetary, phi);
    if (const auto* a3 = report.find(AssumptionId::A3); a3 && !a3->holds)
        throw NoEquilibrium("A3 fails at the solved phi*");
    if (!(gross_r > params.theta * t.c.Rc)) throw NoEquilibrium("capital leverage is not finite at 1+r*");

    MonetaryBgp bgp{};
    bgp.phi_star = phi;
    bgp.gross_r = gross_r;
    bgp.gross_growth = gross_r * t.m;
    bgp.ordering = {t.c.Rc, bgp.gross_growth, gross_r};
    bgp.quadratic_residual = q.relative_residual(phi);
    bgp.assumptions = std::move(report);
    const MoneyPrice money = money_price_coefficient(params, bgp);
    bgp.money_balance_coefficient = money.coefficient;
    bgp.min_e = money.min_e;
    bgp.credit_gdp = credit_gdp(params, bgp);
    return bgp;
}

LandlessBgp solve_landless(const ScenarioParams& params)
{
    validate(params);
    const Terms t = terms(params);
    const double theta_rc = params.theta * t.c.Rc;
    const double gross_r = t.c.income_share * t.c.A / t.m + theta_rc;
    if (!(gross_r > theta_rc)) throw DomainError("landless rate leaves capital leverage infinite");
    return {gross_r, gross_r * t.m};
}

MoneyPrice money_price_coefficient(const ScenarioParams& params, const MonetaryBgp& bgp)
{
    const Terms t = terms(params);
    const double at_zero = brace(t, 0.0, bgp.phi_star, bgp.gross_growth);
    return {at_zero + t.money_slope * params.e.value_or(0.0), -at_zero / t.money_slope};
}

double credit_gdp(const ScenarioParams& params, const MonetaryBgp& bgp)
{
    const Terms t = terms(params);
    const double output = 1.0 + t.k;
    return params.theta * t.c.Rc * t.m / (output * t.c.A) + params.theta_x * (bgp.phi_star + t.k) * t.m / output;
}

double dynamics_endowment(const ScenarioParams& params, const MonetaryBgp& bgp)
{
    if (params.e) return *params.e;
    return bgp.min_e + 1.0;
}

namespace {

DynState step_with(const DynState& s, const ScenarioParams& params, const Terms& t, double e)
{
    if (!(s.gross_r > params.theta * t.c.Rc)) throw DomainError("1+r must exceed theta Rc");
    const Flow now = flow(params, t, s.phi, s.gross_r);
    if (!(now.growth > 0.0)) throw DomainError("phi is not below phi_bar at the current rate");
    const double b_now = brace(t, e, s.phi, now.growth);
    if (!(b_now > 0.0)) throw DomainError("money demand is not positive");

    const double phi_next = now.rx * s.phi / now.growth - t.k;
    const double target = s.gross_r * t.m * b_now / now.growth;
    auto gap = [&](double r_next) {
        return brace(t, e, phi_next, flow(params, t, phi_next, r_next).growth) - target;
    };
    const double lo = params.theta * t.c.Rc * (1.0 + 1e-12);
    const double r_next = roots::solve(gap, lo, t.c.Rc);
    return {phi_next, r_next};
}

} // namespace

DynState dynamics_step(const DynState& state, const ScenarioParams& params)
{
    const MonetaryBgp bgp = solve_bgp_monetary(params);
    return step_with(state, params, terms(params), dynamics_endowment(params, bgp));
}

DeterminacyReport determinacy_report(const ScenarioParams& params, double relative_step)
{
    const MonetaryBgp bgp = solve_bgp_monetary(params);
    const Terms t = terms(params);
    const double e = dynamics_endowment(params, bgp);
    const DynState centre{bgp.phi_star, bgp.gross_r};

    DeterminacyReport rep{};
    const double h[2] = {relative_step * std::abs(centre.phi), relative_step * std::abs(centre.gross_r)};
    for (int j = 0; j < 2; ++j) {
        DynState up = centre;
        DynState down = centre;
        (j == 0 ? up.phi : up.gross_r) += h[j];
        (j == 0 ? down.phi : down.gross_r) -= h[j];
        const DynState fu = step_with(up, params, t, e);
        const DynState fd = step_with(down, params, t, e);
        rep.jacobian[0][j] = (fu.phi - fd.phi) / (2.0 * h[j]);
        rep.jacobian[1][j] = (fu.gross_r - fd.gross_r) / (2.0 * h[j]);
    }

    const auto& J = rep.jacobian;
    const double tr = J[0][0] + J[1][1];
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const std::complex<double> root = std::sqrt(std::complex<double>(tr * tr - 4.0 * det, 0.0));
    rep.eigen_moduli = {std::abs(0.5 * (tr + root)), std::abs(0.5 * (tr - root))};
    rep.inconclusive = std::abs(rep.eigen_moduli[0] - 1.0) <= 1e-9 || std::abs(rep.eigen_moduli[1] - 1.0) <= 1e-9;
    rep.locally_determinate = !rep.inconclusive && rep.eigen_moduli[0] > 1.0 && rep.eigen_moduli[1] > 1.0;
    return rep;
}

std::vector<MonetaryPathState> simulate(const ScenarioParams& params, double K0, int T)
{
    if (!(K0 > 0.0)) throw std::invalid_argument("K0 must be positive");
    if (T < 1) throw std::invalid_argument("T must be at least 1");
    const MonetaryBgp bgp = solve_bgp_monetary(params);
    const Terms t = terms(params);
    const double money = brace(t, dynamics_endowment(params, bgp), bgp.phi_star, bgp.gross_growth);

    std::vector<MonetaryPathState> path;
    path.reserve(static_cast<std::size_t>(T) + 1);
    double K = K0;
    for (int i = 0; i <= T; ++i) {
        const double AK = t.c.A * K;
        const double balances = money * AK;
        path.push_back({i, K, bgp.phi_star * AK, bgp.phi_star, bgp.gross_growth - 1.0, (1.0 - params.alpha) * AK,
                        (1.0 + t.k) * AK, bgp.gross_r, balances, (t.m - 1.0) * balances});
        K *= bgp.gross_growth;
    }
    return path;
}

} // namespace landspec::monetary
