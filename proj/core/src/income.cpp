#include "landspec/income.hpp"

#include "landspec/errors.hpp"
#include "landspec/roots.hpp"

#include <cmath>

namespace landspec {

double saving_rate(const ScenarioParams& p)
{
    if (p.saving_mode == SavingMode::linear_old_only) return 1.0;
    if (!p.beta) throw MissingParameter("log utility requires beta");
    return *p.beta / (1.0 + *p.beta);
}

LaborAllocation real_estate_labor(const ScenarioParams& p, std::optional<double> fixed_nx)
{
    if (!p.rho) throw DomainError("real-estate labor requires rho");
    if (!(p.epsilon > 0.0)) throw DomainError("real-estate labor requires epsilon > 0");
    const double rho = *p.rho;
    const double A = std::pow(p.a, 1.0 - p.alpha);
    const double wage_k = (1.0 - p.alpha) * A;
    const double scale_x = rho * p.epsilon * p.a;

    if (fixed_nx) {
        const double nx = *fixed_nx;
        if (!(nx > 0.0 && nx < 1.0)) throw DomainError("fixed real-estate labor must lie in (0, 1)");
        const double nk = 1.0 - nx;
        // Both sectors' wage bills per unit of A K, relative to the baseline wage bill.
        const double multiplier = (scale_x * std::pow(nx, rho) + wage_k * std::pow(nk, 1.0 - p.alpha)) / wage_k;
        return {nx, nk, multiplier, false};
    }

    // Work in logs: both sides span many orders of magnitude near the ends.
    auto gap = [&](double nx) {
        return std::log(wage_k) - p.alpha * std::log1p(-nx) - std::log(scale_x) - (rho - 1.0) * std::log(nx);
    };
    double lo = 1e-300;
    double hi = 1.0 - 1e-16;
    const double nx = roots::solve(gap, lo, hi);
    const double nk = 1.0 - nx;
    return {nx, nk, std::pow(nk, -p.alpha), true};
}

double labor_income_multiplier(const ScenarioParams& p)
{
    if (!p.rho) return 1.0;
    return real_estate_labor(p).income_multiplier;
}

} // namespace landspec
