#pragma once

#include "landspec/params.hpp"

#include <optional>

namespace landspec {

/// Leverage-related quantities at a given gross safe rate.
struct RateTerms {
    double capital_leverage;  ///< 1 / (1 - theta Rc / (1+r))
    double lambda;            ///< leveraged return on capital
    double rx;                ///< unleveraged land return equalizing leveraged returns
    double land_downpayment;  ///< 1 - theta_x Rx / (1+r)
};

/// Throws DomainError when gross_rate <= theta * Rc.
RateTerms rate_terms(double capital_return, double theta, double theta_x, double gross_rate);

struct DerivedConstants {
    double A;           ///< a^(1-alpha)
    double R;           ///< rental rate alpha A
    double Rc;          ///< alpha A + 1 - delta
    double a_pow_alpha; ///< a^alpha, so dividends per unit of A K are epsilon a^alpha
    /// Entrepreneurs' savings per unit of A K: eta (1-alpha) times the saving
    /// rate and the real-estate labor multiplier (both 1 in the baseline).
    double income_share;
    /// Savings of the whole young cohort from wages per unit of A K.
    double wage_saving_share;
    double saving_rate;
    // Open economy only; the monetary economy recomputes these at r*.
    std::optional<double> lambda;
    std::optional<double> rx_star;
    std::optional<double> capital_leverage;
    std::optional<double> land_downpayment;
};

DerivedConstants derive_constants(const ScenarioParams& params, Economy economy);

} // namespace landspec
