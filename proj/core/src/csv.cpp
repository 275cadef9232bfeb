#include "landspec/csv.hpp"

#include <fmt/format.h>

#include <iterator>

namespace landspec::csv {

std::string real(double value)
{
    return fmt::format("{:.17g}", value);
}

namespace {

void row(std::string& out, std::initializer_list<std::string> cells)
{
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ',';
        out += c;
        first = false;
    }
    out += '\n';
}

void path_row(std::string& out, const open::PathState& s, const char* branch)
{
    if (branch) {
        out += branch;
        out += ',';
    }
    row(out, {std::to_string(s.t), real(s.K), real(s.P), real(s.phi), real(s.g), real(s.w), real(s.Y)});
}

} // namespace

std::string path_csv(std::span<const open::PathState> path)
{
    std::string out = "t,K,P,phi,g,w,Y\n";
    for (const auto& s : path) path_row(out, s, nullptr);
    return out;
}

std::string shock_csv(const open::ShockPaths& paths)
{
    std::string out = "branch,t,K,P,phi,g,w,Y\n";
    for (const auto& s : paths.baseline) path_row(out, s, "baseline");
    for (const auto& s : paths.shocked) path_row(out, s, "shocked");
    return out;
}

std::string monetary_path_csv(std::span<const monetary::MonetaryPathState> path)
{
    std::string out = "t,K,P,phi,g,w,Y,gross_r,real_balances,transfers\n";
    for (const auto& s : path)
        row(out, {std::to_string(s.t), real(s.K), real(s.P), real(s.phi), real(s.g), real(s.w), real(s.Y),
                  real(s.gross_r), real(s.real_balances), real(s.transfers)});
    return out;
}

std::string unbalanced_csv(std::span<const ext::UnbalancedStep> path)
{
    std::string out = "t,phi,n,g,P_over_V\n";
    for (const auto& s : path) row(out, {std::to_string(s.t), real(s.phi), real(s.n), real(s.g), real(s.p_over_v)});
    return out;
}

std::string map_csv(const ScenarioParams& params, int points)
{
    const double bar = open::phi_bar(params);
    std::string out = "phi_t,phi_next\n";
    for (int i = 0; i < points; ++i) {
        const double phi = bar * i / points;
        row(out, {real(phi), real(open::phi_map(phi, params))});
    }
    return out;
}

std::string sweep_csv(std::span<const statics::SweepRecord> records)
{
    std::string out = "epsilon,g_star,phi_star,gross_r,derivative,sign,feasible,reason\n";
    for (const auto& r : records)
        row(out, {real(r.epsilon), real(r.g_star), real(r.phi_star), real(r.gross_r), real(r.derivative),
                  r.feasible ? std::string(statics::to_string(r.sign)) : std::string("na"),
                  r.feasible ? "true" : "false", r.reason});
    return out;
}

std::string monetary_sweep_csv(std::span<const MonetarySweepRow> rows)
{
    std::string out = "epsilon,theta,theta_x,mu,phi_star,gross_r,gross_growth,credit_gdp\n";
    for (const auto& r : rows)
        row(out, {real(r.epsilon), real(r.theta), real(r.theta_x), real(r.mu), real(r.phi_star), real(r.gross_r),
                  real(r.gross_growth), real(r.credit_gdp)});
    return out;
}

} // namespace landspec::csv
