#pragma once

#include "landspec/assumptions.hpp"
#include "landspec/params.hpp"

#include <array>
#include <vector>

namespace landspec::monetary {

/// Return ordering checked by the finite-land-price result.
struct ReturnOrdering {
    double Rc;
    double gross_growth;
    double gross_r;
};

/// Balanced growth path of the closed economy with fiat money.
struct MonetaryBgp {
    double phi_star;
    double gross_r;      ///< 1+r*
    double gross_growth; ///< 1+g* = (1+r*)(1+mu)
    ReturnOrdering ordering;
    /// Real money balances per unit of A K, Q M / (A K), at the scenario e
    /// (0 when e is unset). Negative means no monetary equilibrium for that e.
    double money_balance_coefficient;
    double min_e; ///< endowment coefficient at which money balances vanish
    double credit_gdp;
    double quadratic_residual; ///< relative residual of the phi* quadratic
    AssumptionReport assumptions;
};

/// Coefficients of the steady-state quadratic q2 phi^2 + q1 phi + q0 = 0.
struct Quadratic {
    double q2;
    double q1;
    double q0;

    double operator()(double phi) const { return (q2 * phi + q1) * phi + q0; }
    /// |q(phi)| scaled by the magnitude of its terms.
    double relative_residual(double phi) const;
};

Quadratic steady_state_quadratic(const ScenarioParams& params);

/// Throws AssumptionViolated when A4 fails and NoEquilibrium when
/// the positive root does not exist or A3 fails at the solved phi*.
MonetaryBgp solve_bgp_monetary(const ScenarioParams& params);

struct LandlessBgp {
    double gross_r;
    double gross_growth;
};

/// Money and capital only (land priced at zero, epsilon = 0). Throws
/// DomainError when 1+r* <= theta Rc.
LandlessBgp solve_landless(const ScenarioParams& params);

struct MoneyPrice {
    double coefficient; ///< Q M / (A K)
    double min_e;
};

/// Money-demand coefficient at the scenario e (0 if unset); linear in e with
/// slope s (1-eta) a^alpha.
MoneyPrice money_price_coefficient(const ScenarioParams& params, const MonetaryBgp& bgp);

/// Credit relative to GDP on the balanced growth path.
double credit_gdp(const ScenarioParams& params, const MonetaryBgp& bgp);

/// The two jump variables of the reduced dynamics.
struct DynState {
    double phi;
    double gross_r;
};

/// Endowment coefficient used by the dynamics: the scenario e, or min_e + 1
/// when e is unset.
double dynamics_endowment(const ScenarioParams& params, const MonetaryBgp& bgp);

/// Advances (phi_t, 1+r_t) one period. phi_{t+1} is explicit; 1+r_{t+1}
/// solves the money-market condition on (theta Rc, Rc) with a bracketed
/// solver. Throws DomainError when a money-demand brace is not positive or
/// the state is outside its domain, RootNotBracketed when no 1+r_{t+1}
/// exists in the bracket.
DynState dynamics_step(const DynState& state, const ScenarioParams& params);

struct DeterminacyReport {
    std::array<std::array<double, 2>, 2> jacobian;
    std::array<double, 2> eigen_moduli;
    bool locally_determinate;
    bool inconclusive; ///< a modulus within 1e-9 of 1
};

/// Central-difference Jacobian of dynamics_step at the steady state.
DeterminacyReport determinacy_report(const ScenarioParams& params, double relative_step = 1e-6);

struct MonetaryPathState {
    int t;
    double K;
    double P;
    double phi;
    double g;
    double w;
    double Y;
    double gross_r;
    double real_balances; ///< Q_t M_t
    double transfers;     ///< mu Q_t M_t
};

/// Jump path: phi, 1+r constant from period 0.
std::vector<MonetaryPathState> simulate(const ScenarioParams& params, double K0, int T);

} // namespace landspec::monetary
