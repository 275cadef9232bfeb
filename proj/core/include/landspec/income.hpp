#pragma once

#include "landspec/params.hpp"

#include <optional>

namespace landspec {

/// Share of young-age income that is saved: 1 when agents consume only when
/// old, beta/(1+beta) under log utility. Throws MissingParameter when log
/// utility is selected without beta.
double saving_rate(const ScenarioParams& params);

struct LaborAllocation {
    double nx; ///< labor employed in real estate
    double nk; ///< labor employed in the productive sector
    /// Factor applied to eta (1-alpha) A in the capital accumulation equation.
    double income_multiplier;
    bool mobile;
};

/// Splits labor between real estate and production when real estate uses
/// labor with exponent rho.
///
/// Mobile labor: the real-estate share solves
///   (1-alpha) A (1-nx)^(-alpha) = rho epsilon a nx^(rho-1)
/// by bisection and the multiplier is nk^(-alpha). Immobile labor takes
/// `fixed_nx` and sums both sectors' wage bills. Requires rho set and
/// epsilon > 0 (DomainError otherwise).
LaborAllocation real_estate_labor(const ScenarioParams& params,
                                  std::optional<double> fixed_nx = std::nullopt);

/// 1 when rho is unset, otherwise the mobile-labor multiplier.
double labor_income_multiplier(const ScenarioParams& params);

} // namespace landspec
