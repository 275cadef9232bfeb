#pragma once

#include "landspec/monetary.hpp"
#include "landspec/open_economy.hpp"
#include "landspec/params.hpp"

#include <array>
#include <vector>

namespace landspec::ext {

/// State of the economy with imperfect spillovers: phi is a jump variable,
/// the dividend share n = D / (A K) is predetermined.
struct UnbalancedState {
    double phi;
    double n;
};

struct UnbalancedStep {
    int t;
    double phi;
    double n;
    double g;         ///< realized net growth
    double p_over_v;  ///< land price over fundamental value
};

struct UnbalancedPath {
    std::vector<UnbalancedStep> path;
    double phi0;
    double phi_limit; ///< phi** the path converges to
    bool converged;
    /// Largest |f(phi_t, n_t) - phi_{t+1}| along the path.
    double max_step_residual;
};

/// Closed-form phi** of the unbalanced system (equal to phi* at epsilon = 0).
double unbalanced_phi_limit(const ScenarioParams& params);

/// Equilibrium path when rents grow at the exogenous rate d. phi_0 (and every
/// later phi_t) is found by bisection on (0, phi_bar) so that the path stays
/// on the stable manifold. Requires A1, A2 and A5; throws
/// AssumptionViolated otherwise and ShootingFailed if no phi converges.
UnbalancedPath unbalanced_path(const ScenarioParams& params, double d, double n0, int T);

/// One step of the unbalanced system.
UnbalancedState unbalanced_step(const UnbalancedState& state, const ScenarioParams& params, double d);

struct StabilityMatrix {
    std::array<std::array<double, 2>, 2> jacobian;
    double trace;
    double det;
    bool locally_determinate;
};

/// Closed-form Jacobian of the unbalanced system at (phi**, 0).
StabilityMatrix stability_matrix(const ScenarioParams& params, double d);

/// Central-difference Jacobian of unbalanced_step at (phi**, 0).
std::array<std::array<double, 2>, 2> numerical_unbalanced_jacobian(const ScenarioParams& params, double d,
                                                                   double step = 1e-6);

struct BubbleReport {
    double v_over_d;     ///< fundamental value over current rent
    bool p_exceeds_v;
    double tv_tail;      ///< discounted land price at the horizon
    int horizon;
    double price;            ///< P at the evaluation date (K = 1)
    double fundamental_value;
};

/// Discount factor for land: lambda / (1 - theta_x + theta_x lambda / (1+r)).
double land_discount_factor(const ScenarioParams& params, double gross_r);

/// Fundamental value on a balanced path by truncated summation of discounted
/// rents. `horizon` 0 picks the smallest N with ((1+g)/Rx)^N < 1e-10, capped
/// at 10^6 terms (DomainError when the cap is hit). With epsilon = 0 the
/// land price is pure resale value: p_exceeds_v is true and v_over_d NaN.
BubbleReport fundamental_value(const ScenarioParams& params, const open::OpenBgp& bgp, int horizon = 0);
BubbleReport fundamental_value(const ScenarioParams& params, const monetary::MonetaryBgp& bgp,
                               int horizon = 0);

/// Bubble diagnostics along the unbalanced path started at n0 for T periods.
/// Throws DomainError when A5 fails.
BubbleReport bubble_detect_unbalanced(const ScenarioParams& params, double d, double n0 = 0.01, int T = 200);

} // namespace landspec::ext
