#pragma once

#include "landspec/constants.hpp"
#include "landspec/params.hpp"

namespace landspec::detail {

/// Coefficients of the open-economy recursions at a given gross rate.
struct OpenTerms {
    double A;
    double k;        ///< epsilon a^alpha, rents per unit of A K
    double share;    ///< income share of entrepreneurs' savings
    double leverage; ///< capital leverage factor
    double L;        ///< A times leverage
    double dp;       ///< land down-payment
    double rx;
    double phi_bar;

    double growth(double phi) const { return L * (share - dp * phi); }
};

inline OpenTerms open_terms(const ScenarioParams& p, const DerivedConstants& c, double gross_rate)
{
    const RateTerms t = rate_terms(c.Rc, p.theta, p.theta_x, gross_rate);
    OpenTerms o{};
    o.A = c.A;
    o.k = p.epsilon * c.a_pow_alpha;
    o.share = c.income_share;
    o.leverage = t.capital_leverage;
    o.L = c.A * t.capital_leverage;
    o.dp = t.land_downpayment;
    o.rx = t.rx;
    o.phi_bar = c.income_share / t.land_downpayment;
    return o;
}

inline OpenTerms open_terms(const ScenarioParams& p)
{
    const DerivedConstants c = derive_constants(p, Economy::open);
    return open_terms(p, c, p.rate());
}

} // namespace landspec::detail
