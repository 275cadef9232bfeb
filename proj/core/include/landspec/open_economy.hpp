#pragma once

#include "landspec/errors.hpp"
#include "landspec/params.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace landspec::open {

/// Balanced growth path of the small open economy.
struct OpenBgp {
    double phi_star;       ///< land value relative to productive output, P/(A K)
    double gross_growth;   ///< 1+g*
    double phi_bar;        ///< phi at which capital investment is fully crowded out
    double residual;       ///< |phi* - phi_map(phi*)|
    double land_gdp_ratio; ///< P/Y = phi* / (1 + epsilon a^alpha)
    bool landless;         ///< true when the phi* = 0 branch was requested
};

/// Which root of the steady-state quadratic to return. The landless root
/// exists only for epsilon = 0.
enum class Root { positive, landless };

struct BgpOptions {
    Root root = Root::positive;
    /// Reject solutions with 1+g* < 1-delta (negative gross investment).
    bool enforce_investment_floor = true;
};

/// One period of a simulated path.
struct PathState {
    int t;
    double K;
    double P;
    double phi;
    double g; ///< realized net growth K_{t+1}/K_t - 1
    double w;
    double Y;
};

/// Next-period phi from the land no-arbitrage condition and capital
/// accumulation. Throws DomainError for phi outside [0, phi_bar).
double phi_map(double phi, const ScenarioParams& params);

/// 1+g implied by a given phi. Throws DomainError for phi >= phi_bar.
double growth_given_phi(double phi, const ScenarioParams& params);

/// phi_bar = income share / land down-payment.
double phi_bar(const ScenarioParams& params);

/// Solves the balanced growth path. Throws AssumptionViolated when
/// A1 and A2 fail and NoEquilibrium when 1+g* < 1-delta
/// (epsilon above epsilon_bar) or when the landless root is requested with
/// epsilon > 0.
OpenBgp solve_bgp(const ScenarioParams& params, const BgpOptions& options = {});

inline constexpr double no_crossing = std::numeric_limits<double>::infinity();

/// Smallest epsilon at which 1+g* falls to 1-delta, found by bisection to
/// 1e-10 in epsilon. Returns `no_crossing` when growth stays above 1-delta up
/// to `ceiling`.
double epsilon_bar(const ScenarioParams& params, double ceiling = 10.0);

struct SimulationStart {
    enum class Mode { jump_to_bgp, explicit_phi };
    Mode mode = Mode::jump_to_bgp;
    double phi0 = 0.0;

    static SimulationStart jump() { return {}; }
    static SimulationStart at(double phi0) { return {Mode::explicit_phi, phi0}; }
};

/// Thrown when an explicit path leaves [0, phi_bar). Carries the periods
/// computed before the crossing.
class PathDiverged : public DomainError {
public:
    PathDiverged(const std::string& what, std::vector<PathState> partial)
        : DomainError(what), partial_(std::move(partial))
    {
    }

    const std::vector<PathState>& partial() const noexcept { return partial_; }

private:
    std::vector<PathState> partial_;
};

/// Simulates periods 0..T. In jump mode the land price is set so that
/// phi_0 = phi* and the economy grows at 1+g* from the start. In explicit
/// mode capital and the land price are iterated in levels; any phi_0 other
/// than phi* drifts away.
std::vector<PathState> simulate(const ScenarioParams& params, double K0, int T,
                                SimulationStart start = SimulationStart::jump());

/// Growth change split into partial- and general-equilibrium channels by
/// sequential substitution: new leverage factor (PE1), then new land
/// down-payment (PE2), then new phi* (GE). The parts telescope to `total`.
struct Decomposition {
    double pe_leverage;
    double pe_downpayment;
    double ge_speculation;
    double total;
};

Decomposition decompose(const ScenarioParams& base, const ScenarioParams& changed);

enum class Belief { believed_permanent, anticipated_temporary };

struct ShockPaths {
    std::vector<PathState> shocked;
    std::vector<PathState> baseline;
};

/// One-period rise of land productivity to `eps_high` affecting the rent on
/// land held from period s to s+1. Throws std::invalid_argument unless
/// eps_high >= epsilon and 0 < s < T.
ShockPaths temporary_shock(const ScenarioParams& params, double eps_high, int s, double K0, int T,
                           Belief belief);

} // namespace landspec::open

