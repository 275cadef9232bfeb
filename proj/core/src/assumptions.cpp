#include "landspec/assumptions.hpp"

#include "landspec/constants.hpp"

#include <cmath>
#include <limits>

namespace landspec {

std::string_view to_string(AssumptionId id)
{
    switch (id) {
    case AssumptionId::A1: return "A1";
    case AssumptionId::A2: return "A2";
    case AssumptionId::A3: return "A3";
    case AssumptionId::A4: return "A4";
    case AssumptionId::A5: return "A5";
    }
    return "?";
}

bool AssumptionReport::all_hold() const
{
    for (const auto& r : records)
        if (!r.holds) return false;
    return true;
}

const AssumptionRecord* AssumptionReport::find(AssumptionId id) const
{
    for (const auto& r : records)
        if (r.id == id) return &r;
    return nullptr;
}

std::string AssumptionReport::failures() const
{
    std::string out;
    for (const auto& r : records) {
        if (r.holds) continue;
        if (!out.empty()) out += ",";
        out += to_string(r.id);
    }
    return out;
}

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

AssumptionRecord record(AssumptionId id, double lhs, double rhs)
{
    const double slack = rhs - lhs;
    return {id, slack > 0.0, lhs, rhs, slack};
}

} // namespace

AssumptionReport check_assumptions(const ScenarioParams& p, Economy economy, std::optional<double> phi_star)
{
    AssumptionReport report;
    const double A = std::pow(p.a, 1.0 - p.alpha);
    const double Rc = p.alpha * A + 1.0 - p.delta;
    const double k = p.epsilon * std::pow(p.a, p.alpha);

    double share = p.eta * (1.0 - p.alpha);
    try {
        share = derive_constants(p, Economy::monetary).income_share;
    } catch (const std::exception&) {
        // Invalid extension knobs: fall back to the baseline share.
    }

    if (economy == Economy::open) {
        const double gross_r = p.rate();
        report.records.push_back(record(AssumptionId::A1, p.theta, gross_r / Rc));
        const bool a1 = report.records.back().holds;
        if (a1) {
            const RateTerms t = rate_terms(Rc, p.theta, p.theta_x, gross_r);
            report.records.push_back(record(AssumptionId::A2, t.rx, share * A * t.capital_leverage));
            if (p.d) report.records.push_back(record(AssumptionId::A5, 1.0 + *p.d, t.rx));
        } else {
            report.records.push_back({AssumptionId::A2, false, nan, nan, nan});
            if (p.d) report.records.push_back({AssumptionId::A5, false, 1.0 + *p.d, nan, nan});
        }
        return report;
    }

    const double m = p.money_growth();
    const double c = 1.0 - p.theta_x * m;
    if (k == 0.0)
        report.records.push_back(record(AssumptionId::A3, p.theta_x * m, 1.0));
    else if (phi_star && *phi_star > 0.0)
        report.records.push_back(record(AssumptionId::A3, p.theta_x * m * (1.0 + k / *phi_star), 1.0));

    const double lhs = Rc * (1.0 - p.theta) / (A * (1.0 - p.theta_x));
    const double rhs = c > 0.0 ? share / c : -std::numeric_limits<double>::infinity();
    report.records.push_back(record(AssumptionId::A4, lhs, rhs));
    return report;
}

namespace {

std::string violation_message(const AssumptionReport& report)
{
    return "assumption violated: " + report.failures();
}

} // namespace

AssumptionViolated::AssumptionViolated(AssumptionReport report)
    : Error(violation_message(report)), report_(std::move(report))
{
}

} // namespace landspec
