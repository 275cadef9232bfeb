#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace landspec {

enum class Economy { open, monetary };

enum class SavingMode { linear_old_only, log_utility };

/// Parameters that can be perturbed by the comparative-statics engine.
enum class Param { theta, theta_x, r, mu, epsilon };

/// Exogenous parameters of one scenario.
///
/// Rates are stored gross: `gross_r` is 1+r and `gross_mu` is 1+mu. Scenario
/// files carry net values and are converted on load. Which of the two is
/// active depends on the economy being solved; the other may be absent.
struct ScenarioParams {
    double theta = 0.0;   ///< pledgeable fraction of capital returns
    double theta_x = 0.0; ///< pledgeable fraction of land returns
    std::optional<double> gross_r;
    std::optional<double> gross_mu;
    double eta = 0.0;   ///< entrepreneur share of the young
    double alpha = 0.0; ///< capital share
    double a = 0.0;     ///< labor-productivity coefficient, chi(K) = a K
    double delta = 0.0; ///< depreciation
    double epsilon = 0.0; ///< land productivity relative to labor productivity

    std::optional<double> beta; ///< discount factor, log utility only
    std::optional<double> rho;  ///< labor exponent in real estate
    std::optional<double> d;    ///< growth of land rents under imperfect spillovers
    std::optional<double> e;    ///< worker endowment coefficient
    SavingMode saving_mode = SavingMode::linear_old_only;

    /// 1+r; throws MissingParameter when unset.
    double rate() const;
    /// 1+mu; throws MissingParameter when unset.
    double money_growth() const;
};

/// Throws DomainError when a field is non-finite or outside its range.
void validate(const ScenarioParams& params);

/// Value of a perturbable parameter in its natural (net) units.
double get(const ScenarioParams& params, Param which);
/// Sets a perturbable parameter given in natural (net) units.
void set(ScenarioParams& params, Param which, double value);

std::string_view to_string(Param which);
std::string_view to_string(Economy which);
std::string_view to_string(SavingMode which);
Param parse_param(std::string_view name);
Economy parse_economy(std::string_view name);

} // namespace landspec
