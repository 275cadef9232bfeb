#include "landspec_cli/cli.hpp"

#include "landspec/assumptions.hpp"
#include "landspec/comparative_statics.hpp"
#include "landspec/csv.hpp"
#include "landspec/errors.hpp"
#include "landspec/extensions.hpp"
#include "landspec/monetary.hpp"
#include "landspec/open_economy.hpp"
#include "landspec/scenario_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#ifndef LANDSPEC_VERSION
#define LANDSPEC_VERSION "unknown"
#endif

namespace landspec::cli {

namespace fs = std::filesystem;
using csv::real;

namespace {

struct Options {
    std::string economy = "open";
    std::string scenario;
    std::string out = ".";
    std::string wrt = "theta_x";
    std::optional<double> eps_from;
    std::optional<double> eps_to;
    int steps = 200;
    unsigned threads = 1;
    int periods = 50;
    double k0 = 1.0;
    std::optional<double> shock_eps;
    std::optional<int> shock_at;
    std::string belief = "believed_permanent";
    std::optional<double> d;
    std::optional<double> n0;
};

class Writer {
public:
    Writer(std::string command, const Options& o) : command_(std::move(command)), scenario_(o.scenario)
    {
        const char* env = std::getenv("LANDSPEC_OUTDIR");
        dir_ = env && *env ? fs::path(env) : fs::path(o.out);
        fs::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& body) const
    {
        put(dir_ / name, body);
        put(dir_ / (name + ".manifest"),
            fmt::format("command = {}\nscenario_path = {}\noutput_dir = {}\nseedless = true\ntool_version = {}\n",
                        command_, scenario_, dir_.string(), LANDSPEC_VERSION));
    }

private:
    static void put(const fs::path& path, const std::string& body)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
        f << body;
    }

    std::string command_;
    std::string scenario_;
    fs::path dir_;
};

std::string assumptions_csv(const AssumptionReport& report)
{
    std::string out = "id,holds,lhs,rhs,slack\n";
    for (const auto& r : report.records)
        out += fmt::format("{},{},{},{},{}\n", to_string(r.id), r.holds ? "true" : "false", real(r.lhs), real(r.rhs),
                           real(r.slack));
    return out;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    const ScenarioParams p = load_scenario(o.scenario);
    const Economy economy = parse_economy(o.economy);
    const Writer w("solve", o);
    w.write("assumptions.csv", assumptions_csv(check_assumptions(p, economy)));

    if (economy == Economy::open) {
        const open::OpenBgp b = open::solve_bgp(p);
        w.write("bgp.csv", "economy,epsilon,phi_star,gross_growth,gross_r,phi_bar,residual,land_gdp_ratio\n" +
                               fmt::format("open,{},{},{},{},{},{},{}\n", real(p.epsilon), real(b.phi_star),
                                           real(b.gross_growth), real(p.rate()), real(b.phi_bar), real(b.residual),
                                           real(b.land_gdp_ratio)));
        w.write("map.csv", csv::map_csv(p));
        fmt::print(out, "phi_star     {}\ngross_growth {}\nphi_bar      {}\n", real(b.phi_star),
                   real(b.gross_growth), real(b.phi_bar));
        return ok;
    }

    const monetary::MonetaryBgp b = monetary::solve_bgp_monetary(p);
    w.write("assumptions.csv", assumptions_csv(b.assumptions));
    w.write("bgp.csv",
            "economy,epsilon,phi_star,gross_growth,gross_r,Rc,money_balance_coefficient,min_e,credit_gdp,"
            "quadratic_residual\n" +
                fmt::format("monetary,{},{},{},{},{},{},{},{},{}\n", real(p.epsilon), real(b.phi_star),
                            real(b.gross_growth), real(b.gross_r), real(b.ordering.Rc),
                            real(b.money_balance_coefficient), real(b.min_e), real(b.credit_gdp),
                            real(b.quadratic_residual)));
    fmt::print(out, "phi_star     {}\ngross_growth {}\ngross_r      {}\ncredit_gdp   {}\n", real(b.phi_star),
               real(b.gross_growth), real(b.gross_r), real(b.credit_gdp));
    return ok;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const ScenarioParams p = load_scenario(o.scenario);
    const Economy economy = parse_economy(o.economy);
    const Param wrt = parse_param(o.wrt);
    if (o.steps < 1) throw std::invalid_argument("--steps must be at least 1");

    double to = 0.0;
    if (o.eps_to)
        to = *o.eps_to;
    else
        to = std::min(0.99 * statics::feasible_epsilon_ceiling(p, economy), 1.0);
    const std::vector<double> grid = statics::linear_grid(o.eps_from.value_or(0.0), to, o.steps);

    const auto records = statics::sign_map(p, economy, wrt, grid, o.threads);
    const Writer w("sweep", o);
    w.write("sweep.csv", csv::sweep_csv(records));

    if (economy == Economy::monetary) {
        std::vector<csv::MonetarySweepRow> rows;
        rows.reserve(grid.size());
        for (const auto& r : records) {
            ScenarioParams q = p;
            q.epsilon = r.epsilon;
            csv::MonetarySweepRow row{r.epsilon, q.theta, q.theta_x, q.money_growth() - 1.0, r.phi_star, r.gross_r,
                                      r.g_star + 1.0, std::numeric_limits<double>::quiet_NaN()};
            try {
                row.credit_gdp = monetary::solve_bgp_monetary(q).credit_gdp;
            } catch (const Error&) {
            }
            rows.push_back(row);
        }
        w.write("monetary_sweep.csv", csv::monetary_sweep_csv(rows));
    }

    std::size_t flips = 0;
    std::size_t feasible = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].feasible) continue;
        ++feasible;
        if (i > 0 && records[i - 1].feasible && records[i - 1].sign != records[i].sign) ++flips;
    }
    fmt::print(out, "{} points, {} feasible, {} sign changes\n", records.size(), feasible, flips);
    return ok;
}

open::Belief parse_belief(const std::string& name)
{
    if (name == "believed_permanent") return open::Belief::believed_permanent;
    if (name == "anticipated_temporary") return open::Belief::anticipated_temporary;
    throw std::invalid_argument("unknown belief '" + name + "'");
}

int cmd_simulate(const Options& o, std::ostream& out)
{
    const ScenarioParams p = load_scenario(o.scenario);
    const Economy economy = parse_economy(o.economy);
    if (o.periods < 1) throw std::invalid_argument("--periods must be at least 1");
    const Writer w("simulate", o);

    if (o.d || o.n0) {
        if (economy != Economy::open) throw std::invalid_argument("unbalanced paths require --economy open");
        const std::optional<double> d = o.d ? o.d : p.d;
        if (!d) throw std::invalid_argument("unbalanced path needs --d or 'd' in the scenario");
        const ext::UnbalancedPath path = ext::unbalanced_path(p, *d, o.n0.value_or(0.01), o.periods);
        w.write("path.csv", csv::unbalanced_csv(path.path));
        fmt::print(out, "phi0 {} phi_limit {} converged {}\n", real(path.phi0), real(path.phi_limit),
                   path.converged ? "true" : "false");
        return ok;
    }

    if (economy == Economy::monetary) {
        if (o.shock_eps || o.shock_at) throw std::invalid_argument("shocks are available in the open economy only");
        w.write("path.csv", csv::monetary_path_csv(monetary::simulate(p, o.k0, o.periods)));
        fmt::print(out, "{} periods written\n", o.periods + 1);
        return ok;
    }

    if (o.shock_eps || o.shock_at) {
        if (!o.shock_eps || !o.shock_at) throw std::invalid_argument("--shock-eps and --shock-at go together");
        const open::ShockPaths paths =
            open::temporary_shock(p, *o.shock_eps, *o.shock_at, o.k0, o.periods, parse_belief(o.belief));
        w.write("path.csv", csv::shock_csv(paths));
        fmt::print(out, "shock at t = {}: P_s {} vs baseline {}\n", *o.shock_at,
                   real(paths.shocked[static_cast<std::size_t>(*o.shock_at)].P),
                   real(paths.baseline[static_cast<std::size_t>(*o.shock_at)].P));
        return ok;
    }

    w.write("path.csv", csv::path_csv(open::simulate(p, o.k0, o.periods)));
    fmt::print(out, "{} periods written\n", o.periods + 1);
    return ok;
}

int cmd_check(const Options& o, std::ostream& out, bool economy_given)
{
    const ScenarioParams p = load_scenario(o.scenario);
    std::vector<Economy> economies;
    if (economy_given)
        economies.push_back(parse_economy(o.economy));
    else {
        if (p.gross_r) economies.push_back(Economy::open);
        if (p.gross_mu) economies.push_back(Economy::monetary);
    }
    if (economies.empty()) throw std::invalid_argument("scenario sets neither r nor mu");

    std::string table = "kind,economy,id,pass,value,detail\n";
    bool all = true;
    for (Economy e : economies) {
        std::optional<double> phi;
        if (e == Economy::monetary) {
            try {
                phi = monetary::solve_bgp_monetary(p).phi_star;
            } catch (const Error&) {
            }
        }
        const AssumptionReport rep = check_assumptions(p, e, phi);
        for (const auto& r : rep.records) {
            all = all && r.holds;
            table += fmt::format("assumption,{},{},{},{},{} < {}\n", to_string(e), to_string(r.id),
                                 r.holds ? "true" : "false", real(r.slack), real(r.lhs), real(r.rhs));
            fmt::print(out, "{:<10} {:<26} {:<5} slack {}\n", to_string(e), to_string(r.id),
                       r.holds ? "ok" : "FAIL", real(r.slack));
        }
        const statics::PropositionReport props = e == Economy::open ? statics::proposition_suite(p, std::nullopt)
                                                                    : statics::proposition_suite(std::nullopt, p);
        for (const auto& c : props.checks) {
            all = all && c.pass;
            table += fmt::format("proposition,{},{},{},{},{}\n", to_string(e), c.id, c.pass ? "true" : "false",
                                 real(c.value), c.claim);
            fmt::print(out, "{:<10} {:<26} {:<5} {}\n", to_string(e), c.id, c.pass ? "ok" : "FAIL", c.claim);
        }
    }
    const Writer w("check", o);
    w.write("check.csv", table);
    return all ? ok : check_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Balanced growth, dynamics and comparative statics with land speculation", "landspec"};
    app.require_subcommand(1);
    app.set_version_flag("--version", LANDSPEC_VERSION);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--economy", o.economy, "open or monetary")
            ->check(CLI::IsMember({"open", "monetary"}))
            ->capture_default_str();
        sub->add_option("--scenario", o.scenario, "scenario file")->required();
        sub->add_option("--out", o.out, "output directory (LANDSPEC_OUTDIR overrides)")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "solve the balanced growth path");
    common(solve);

    auto* sweep = app.add_subcommand("sweep", "sign map of d(1+g*)/d<param> over epsilon");
    common(sweep);
    sweep->add_option("--wrt", o.wrt, "theta, theta_x, r or mu")->check(CLI::IsMember({"theta", "theta_x", "r", "mu"}));
    sweep->add_option("--eps-from", o.eps_from);
    sweep->add_option("--eps-to", o.eps_to);
    sweep->add_option("--steps", o.steps)->capture_default_str();
    sweep->add_option("--threads", o.threads)->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "simulate a path");
    common(simulate);
    simulate->add_option("--periods", o.periods)->capture_default_str();
    simulate->add_option("--k0", o.k0)->capture_default_str();
    simulate->add_option("--shock-eps", o.shock_eps);
    simulate->add_option("--shock-at", o.shock_at);
    simulate->add_option("--belief", o.belief)->check(CLI::IsMember({"believed_permanent", "anticipated_temporary"}));
    simulate->add_option("--d", o.d, "rent growth for the unbalanced path");
    simulate->add_option("--n0", o.n0, "initial dividend share for the unbalanced path");

    auto* check = app.add_subcommand("check", "assumption and proposition report");
    common(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << LANDSPEC_VERSION << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    try {
        if (solve->parsed()) return cmd_solve(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        return cmd_check(o, out, check->count("--economy") > 0);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const NoEquilibrium& e) {
        err << "no equilibrium: " << e.what() << '\n';
        return no_equilibrium;
    } catch (const AssumptionViolated& e) {
        err << e.what() << '\n';
        return assumption;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return assumption;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return no_equilibrium;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
}

} // namespace landspec::cli
