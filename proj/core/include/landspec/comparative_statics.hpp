#pragma once

#include "landspec/params.hpp"

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace landspec::statics {

/// Quantity being differentiated.
enum class Target { gross_growth, phi_star, gross_r, credit_gdp, land_gdp };

enum class Sign { neg, zero, pos };

inline constexpr double sign_tolerance = 1e-9;

Sign sign_of(double value);
std::string_view to_string(Sign sign);
std::string_view to_string(Target target);

/// Evaluates a target at the solved balanced growth path. Propagates solver
/// errors (AssumptionViolated, NoEquilibrium, DomainError).
double evaluate(const ScenarioParams& params, Economy economy, Target target);

struct DerivativeEstimate {
    double value;      ///< Richardson extrapolant
    double raw_h;      ///< central difference with step h
    double raw_half;   ///< central difference with step h/2
    double h;
};

/// Central difference with one Richardson step. The default step is
/// 1e-5 max(1, |x|); it shrinks by 10 until every evaluation is feasible,
/// failing with RegionTooNarrow below 1e-10. Throws std::invalid_argument
/// for r in the monetary economy or mu in the open economy.
DerivativeEstimate derivative(const ScenarioParams& params, Economy economy, Param wrt,
                              std::optional<double> h = std::nullopt,
                              Target target = Target::gross_growth);

struct SweepRecord {
    double epsilon;
    std::map<std::string, double> param_values;
    double g_star;   ///< net growth
    double phi_star;
    double gross_r;
    double derivative;
    Target derivative_target;
    Param wrt;
    Sign sign;
    bool feasible;
    std::string reason; ///< empty when feasible
};

/// One record per grid point, sorted by epsilon. Points where the solver
/// fails or 1+g* < 1-delta are kept with feasible = false and a reason code.
/// Output does not depend on `threads`.
std::vector<SweepRecord> sign_map(const ScenarioParams& params, Economy economy, Param wrt,
                                  std::span<const double> eps_grid, unsigned threads = 1);

/// Evenly spaced grid of `steps` points on [from, to].
std::vector<double> linear_grid(double from, double to, int steps);

/// Largest epsilon <= ceiling such that every epsilon below it is feasible.
double feasible_epsilon_ceiling(const ScenarioParams& params, Economy economy, double ceiling = 10.0);

/// Default sweep range [0, min(0.99 * feasible ceiling, 1)] with 200 points.
std::vector<double> default_grid(const ScenarioParams& params, Economy economy);

inline constexpr double no_flip = std::numeric_limits<double>::infinity();

/// Epsilon where d(1+g*)/d(wrt) changes sign, bisected to an interval of 1e-8
/// between epsilon = 1e-6 and the feasible ceiling. Returns `no_flip` when the
/// signs at both ends agree.
double critical_epsilon(const ScenarioParams& params, Economy economy, Param wrt, double ceiling = 10.0);

struct PropositionCheck {
    std::string id;
    std::string claim;
    double value; ///< derivative or margin the claim is about
    bool applicable;
    bool pass;
};

struct PropositionReport {
    std::vector<PropositionCheck> checks;
    bool all_pass() const;
};

/// Sign claims evaluated at epsilon = 1e-6 for whichever parameter sets are
/// supplied. Claims that cannot be evaluated (solver failure) fail.
PropositionReport proposition_suite(const std::optional<ScenarioParams>& open_params,
                                    const std::optional<ScenarioParams>& monetary_params);

} // namespace landspec::statics
