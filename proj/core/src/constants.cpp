#include "landspec/constants.hpp"

#include "landspec/errors.hpp"
#include "landspec/income.hpp"

#include <cmath>
#include <string>

namespace landspec {

RateTerms rate_terms(double Rc, double theta, double theta_x, double gross_rate)
{
    const double denom = 1.0 - theta * Rc / gross_rate;
    if (!(gross_rate > 0.0) || !(denom > 0.0))
        throw DomainError("capital leverage is not finite at 1+r = " + std::to_string(gross_rate));
    const double leverage = 1.0 / denom;
    const double lambda = Rc * (1.0 - theta) * leverage;
    const double spread = 1.0 - theta_x + theta_x * lambda / gross_rate;
    const double rx = lambda / spread;
    return {leverage, lambda, rx, (1.0 - theta_x) / spread};
}

DerivedConstants derive_constants(const ScenarioParams& p, Economy economy)
{
    validate(p);
    DerivedConstants c{};
    c.A = std::pow(p.a, 1.0 - p.alpha);
    c.R = p.alpha * c.A;
    c.Rc = c.R + 1.0 - p.delta;
    c.a_pow_alpha = std::pow(p.a, p.alpha);
    c.saving_rate = saving_rate(p);
    const double labor = labor_income_multiplier(p);
    c.wage_saving_share = c.saving_rate * (1.0 - p.alpha) * labor;
    c.income_share = p.eta * c.wage_saving_share;
    if (economy == Economy::open) {
        const RateTerms t = rate_terms(c.Rc, p.theta, p.theta_x, p.rate());
        c.lambda = t.lambda;
        c.rx_star = t.rx;
        c.capital_leverage = t.capital_leverage;
        c.land_downpayment = t.land_downpayment;
    }
    return c;
}

} // namespace landspec
