#include "landspec/extensions.hpp"

#include "landspec/assumptions.hpp"
#include "landspec/constants.hpp"
#include "landspec/errors.hpp"
#include "open_terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace landspec::ext {

using detail::OpenTerms;
using detail::open_terms;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

UnbalancedState step(const OpenTerms& o, double d, const UnbalancedState& s, double* growth = nullptr)
{
    const double G = o.growth(s.phi);
    if (growth) *growth = G;
    return {(o.rx * s.phi - (1.0 + d) * s.n) / G, (1.0 + d) * s.n / G};
}

double limit(const OpenTerms& o)
{
    return (o.share * o.L - o.rx) / (o.L * o.dp);
}

void require_unbalanced(const ScenarioParams& params, double d)
{
    ScenarioParams q = params;
    q.d = d;
    AssumptionReport report = check_assumptions(q, Economy::open);
    if (!report.all_hold()) throw AssumptionViolated(std::move(report));
}

/// Saddle-path search for the jump variable given the predetermined dividend
/// share. A trial phi is "high" when it drifts above the linear stable
/// manifold (or leaves the domain upward) and "low" when it drifts below.
class Shooter {
public:
    Shooter(const OpenTerms& o, double d) : o_(o), d_(d), target_(limit(o))
    {
        const double j11 = o.share * o.L / o.rx;
        const double j12 = -(1.0 + d) / o.rx;
        const double j22 = (1.0 + d) / o.rx;
        slope_ = j12 / (j22 - j11);
        tol_ = 0.1 * std::min(target_, o.phi_bar - target_);
    }

    double solve(double n) const
    {
        if (n == 0.0) return target_;
        double lo = 0.0;
        double hi = o_.phi_bar;
        if (classify({lo, n}) >= 0 || classify({std::nextafter(hi, 0.0), n}) <= 0)
            throw ShootingFailed("stable path not bracketed by (0, phi_bar) at n = " + std::to_string(n));
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            const int c = classify({mid, n});
            if (c > 0)
                hi = mid;
            else if (c < 0)
                lo = mid;
            else
                return mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    int classify(UnbalancedState s) const
    {
        for (int t = 0; t < window; ++t) {
            if (s.phi >= o_.phi_bar) return 1;
            if (s.phi < 0.0) return -1;
            const double gap = s.phi - target_ - slope_ * s.n;
            if (gap > tol_) return 1;
            if (gap < -tol_) return -1;
            double G = 0.0;
            s = step(o_, d_, s, &G);
            if (G <= 0.0) return 1;
        }
        return 0;
    }

    static constexpr int window = 3000;
    OpenTerms o_;
    double d_;
    double target_;
    double slope_;
    double tol_;
};

struct Summed {
    double value;
    int horizon;
};

/// Neumaier-compensated sum of first * ratio^(j-1), j = 1..N.
Summed geometric_sum(double first, double ratio, int horizon)
{
    if (horizon <= 0) {
        const double n = std::ceil(std::log(1e-10) / std::log(ratio));
        if (!(n <= 1e6)) throw DomainError("fundamental value needs more than 10^6 terms");
        horizon = std::max(1, static_cast<int>(n));
        while (horizon > 1 && std::pow(ratio, horizon - 1) < 1e-10) --horizon;
        while (std::pow(ratio, horizon) >= 1e-10) ++horizon;
    }
    double sum = 0.0;
    double carry = 0.0;
    double term = first;
    for (int j = 1; j <= horizon; ++j) {
        const double next = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
        term *= ratio;
    }
    return {sum + carry, horizon};
}

BubbleReport balanced(double price, double rent, double growth, double discount, int horizon)
{
    BubbleReport rep{};
    rep.price = price;
    if (rent == 0.0) {
        rep.v_over_d = nan;
        rep.p_exceeds_v = price > 0.0;
        rep.horizon = std::max(horizon, 0);
        rep.tv_tail = std::pow(growth / discount, rep.horizon) * price;
        rep.fundamental_value = 0.0;
        return rep;
    }
    const double ratio = growth / discount;
    if (!(ratio < 1.0)) throw DomainError("land discount factor does not exceed growth");
    const Summed v = geometric_sum(rent * ratio, ratio, horizon);
    rep.horizon = v.horizon;
    rep.fundamental_value = v.value;
    rep.v_over_d = v.value / rent;
    rep.tv_tail = std::pow(ratio, v.horizon) * price;
    rep.p_exceeds_v = price - v.value > rep.tv_tail + 1e-9 * price;
    return rep;
}

} // namespace

double unbalanced_phi_limit(const ScenarioParams& params)
{
    return limit(open_terms(params));
}

UnbalancedState unbalanced_step(const UnbalancedState& state, const ScenarioParams& params, double d)
{
    return step(open_terms(params), d, state);
}

UnbalancedPath unbalanced_path(const ScenarioParams& params, double d, double n0, int T)
{
    if (!(n0 >= 0.0)) throw std::invalid_argument("n0 must be non-negative");
    if (T < 1) throw std::invalid_argument("T must be at least 1");
    require_unbalanced(params, d);
    const OpenTerms o = open_terms(params);
    const Shooter shooter(o, d);
    const double v_over_d = (1.0 + d) / (o.rx - (1.0 + d));

    UnbalancedPath out{};
    out.phi_limit = limit(o);
    out.path.reserve(static_cast<std::size_t>(T) + 1);
    double n = n0;
    double predicted = nan;
    for (int t = 0; t <= T; ++t) {
        const double phi = shooter.solve(n);
        if (t > 0) out.max_step_residual = std::max(out.max_step_residual, std::abs(predicted - phi));
        double G = 0.0;
        const UnbalancedState next = step(o, d, {phi, n}, &G);
        out.path.push_back({t, phi, n, G - 1.0, n > 0.0 ? phi / (v_over_d * n) : std::numeric_limits<double>::infinity()});
        predicted = next.phi;
        n = next.n;
    }
    out.phi0 = out.path.front().phi;

    const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(T) / 4);
    out.converged = true;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t i = out.path.size() - tail - 1; i < out.path.size(); ++i) {
        const double dev = std::abs(out.path[i].phi - out.phi_limit) + out.path[i].n;
        if (!std::isfinite(dev) || dev > previous + 1e-12) out.converged = false;
        previous = dev;
    }
    return out;
}

StabilityMatrix stability_matrix(const ScenarioParams& params, double d)
{
    const OpenTerms o = open_terms(params);
    StabilityMatrix m{};
    m.jacobian = {{{o.share * o.L / o.rx, -(1.0 + d) / o.rx}, {0.0, (1.0 + d) / o.rx}}};
    m.trace = m.jacobian[0][0] + m.jacobian[1][1];
    m.det = m.jacobian[0][0] * m.jacobian[1][1] - m.jacobian[0][1] * m.jacobian[1][0];
    m.locally_determinate = m.det > 0.0 && m.det < m.trace - 1.0;
    return m;
}

std::array<std::array<double, 2>, 2> numerical_unbalanced_jacobian(const ScenarioParams& params, double d,
                                                                   double h)
{
    const OpenTerms o = open_terms(params);
    const UnbalancedState centre{limit(o), 0.0};
    const double steps[2] = {h * std::max(1.0, centre.phi), h};
    std::array<std::array<double, 2>, 2> J{};
    for (int j = 0; j < 2; ++j) {
        UnbalancedState up = centre;
        UnbalancedState down = centre;
        (j == 0 ? up.phi : up.n) += steps[j];
        (j == 0 ? down.phi : down.n) -= steps[j];
        const UnbalancedState fu = step(o, d, up);
        const UnbalancedState fd = step(o, d, down);
        J[0][j] = (fu.phi - fd.phi) / (2.0 * steps[j]);
        J[1][j] = (fu.n - fd.n) / (2.0 * steps[j]);
    }
    return J;
}

double land_discount_factor(const ScenarioParams& params, double gross_r)
{
    const DerivedConstants c = derive_constants(params, Economy::monetary);
    return rate_terms(c.Rc, params.theta, params.theta_x, gross_r).rx;
}

BubbleReport fundamental_value(const ScenarioParams& params, const open::OpenBgp& bgp, int horizon)
{
    const OpenTerms o = open_terms(params);
    return balanced(bgp.phi_star * o.A, params.epsilon * params.a, bgp.gross_growth, o.rx, horizon);
}

BubbleReport fundamental_value(const ScenarioParams& params, const monetary::MonetaryBgp& bgp, int horizon)
{
    const DerivedConstants c = derive_constants(params, Economy::monetary);
    return balanced(bgp.phi_star * c.A, params.epsilon * params.a, bgp.gross_growth,
                    land_discount_factor(params, bgp.gross_r), horizon);
}

BubbleReport bubble_detect_unbalanced(const ScenarioParams& params, double d, double n0, int T)
{
    const OpenTerms o = open_terms(params);
    if (!(o.rx > 1.0 + d)) throw DomainError("A5 fails: fundamental value is infinite");
    const UnbalancedPath run = unbalanced_path(params, d, n0, T);

    BubbleReport rep{};
    rep.v_over_d = (1.0 + d) / (o.rx - (1.0 + d));
    rep.horizon = T;
    rep.price = run.phi0 * o.A;
    rep.fundamental_value = n0 * o.A * rep.v_over_d;
    rep.p_exceeds_v = rep.price > rep.fundamental_value;
    // Capital relative to Rx^t keeps the discounted price finite for long horizons.
    double scaled_k = 1.0;
    for (int t = 0; t < T; ++t) scaled_k *= (1.0 + run.path[static_cast<std::size_t>(t)].g) / o.rx;
    rep.tv_tail = run.path.back().phi * o.A * scaled_k;
    return rep;
}

} // namespace landspec::ext
