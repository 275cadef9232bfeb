#include "landspec/params.hpp"

#include "landspec/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landspec {

double ScenarioParams::rate() const
{
    if (!gross_r) throw MissingParameter("interest rate r is not set");
    return *gross_r;
}

double ScenarioParams::money_growth() const
{
    if (!gross_mu) throw MissingParameter("money growth mu is not set");
    return *gross_mu;
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw DomainError(what);
}

void check_finite(double v, const char* name)
{
    require(std::isfinite(v), std::string(name) + " must be finite");
}

} // namespace

void validate(const ScenarioParams& p)
{
    check_finite(p.theta, "theta");
    check_finite(p.theta_x, "theta_x");
    check_finite(p.eta, "eta");
    check_finite(p.alpha, "alpha");
    check_finite(p.a, "a");
    check_finite(p.delta, "delta");
    check_finite(p.epsilon, "epsilon");
    require(p.theta >= 0.0 && p.theta <= 1.0, "theta must lie in [0, 1]");
    require(p.theta_x >= 0.0 && p.theta_x <= 1.0, "theta_x must lie in [0, 1]");
    require(p.eta > 0.0 && p.eta < 1.0, "eta must lie in (0, 1)");
    require(p.alpha > 0.0 && p.alpha < 1.0, "alpha must lie in (0, 1)");
    require(p.a > 0.0, "a must be positive");
    require(p.delta >= 0.0 && p.delta <= 1.0, "delta must lie in [0, 1]");
    require(p.epsilon >= 0.0, "epsilon must be non-negative");
    if (p.gross_r) {
        check_finite(*p.gross_r, "r");
        require(*p.gross_r > 0.0, "r must exceed -1");
    }
    if (p.gross_mu) {
        check_finite(*p.gross_mu, "mu");
        require(*p.gross_mu >= 1.0, "mu must be non-negative");
    }
    if (p.beta) {
        check_finite(*p.beta, "beta");
        require(*p.beta > 0.0, "beta must be positive");
    }
    if (p.rho) {
        check_finite(*p.rho, "rho");
        require(*p.rho > 0.0 && *p.rho < 1.0, "rho must lie in (0, 1)");
    }
    if (p.d) {
        check_finite(*p.d, "d");
        require(*p.d >= 0.0, "d must be non-negative");
    }
    if (p.e) {
        check_finite(*p.e, "e");
        require(*p.e >= 0.0, "e must be non-negative");
    }
}

double get(const ScenarioParams& p, Param which)
{
    switch (which) {
    case Param::theta: return p.theta;
    case Param::theta_x: return p.theta_x;
    case Param::r: return p.rate() - 1.0;
    case Param::mu: return p.money_growth() - 1.0;
    case Param::epsilon: return p.epsilon;
    }
    throw std::invalid_argument("unknown parameter");
}

void set(ScenarioParams& p, Param which, double value)
{
    switch (which) {
    case Param::theta: p.theta = value; return;
    case Param::theta_x: p.theta_x = value; return;
    case Param::r: p.gross_r = 1.0 + value; return;
    case Param::mu: p.gross_mu = 1.0 + value; return;
    case Param::epsilon: p.epsilon = value; return;
    }
    throw std::invalid_argument("unknown parameter");
}

std::string_view to_string(Param which)
{
    switch (which) {
    case Param::theta: return "theta";
    case Param::theta_x: return "theta_x";
    case Param::r: return "r";
    case Param::mu: return "mu";
    case Param::epsilon: return "epsilon";
    }
    return "?";
}

std::string_view to_string(Economy which)
{
    return which == Economy::open ? "open" : "monetary";
}

std::string_view to_string(SavingMode which)
{
    return which == SavingMode::linear_old_only ? "linear_old_only" : "log_utility";
}

Param parse_param(std::string_view name)
{
    for (Param p : {Param::theta, Param::theta_x, Param::r, Param::mu, Param::epsilon})
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

Economy parse_economy(std::string_view name)
{
    if (name == "open") return Economy::open;
    if (name == "monetary") return Economy::monetary;
    throw std::invalid_argument("unknown economy '" + std::string(name) + "'");
}

} // namespace landspec
