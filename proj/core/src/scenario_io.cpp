#include "landspec/scenario_io.hpp"

#include "landspec/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace landspec {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double number(std::string_view text, int line, std::string_view key)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, "value of '" + std::string(key) + "' is not a number: '" + std::string(text) + "'");
    return value;
}

} // namespace

ScenarioParams parse_scenario(std::string_view text)
{
    ScenarioParams p;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "missing key");
        if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");
        if (!seen.emplace(key).second) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");

        if (key == "saving_mode") {
            if (value == "linear_old_only")
                p.saving_mode = SavingMode::linear_old_only;
            else if (value == "log_utility")
                p.saving_mode = SavingMode::log_utility;
            else
                throw ParseError(line_no, "unknown saving_mode '" + std::string(value) + "'");
            continue;
        }
        if (key == "psi")
            throw ParseError(line_no, "rent exponent 'psi' is not supported; use 'd' for rent growth");

        const double v = number(value, line_no, key);
        if (key == "theta") p.theta = v;
        else if (key == "theta_x") p.theta_x = v;
        else if (key == "r") p.gross_r = 1.0 + v;
        else if (key == "mu") p.gross_mu = 1.0 + v;
        else if (key == "eta") p.eta = v;
        else if (key == "alpha") p.alpha = v;
        else if (key == "a") p.a = v;
        else if (key == "delta") p.delta = v;
        else if (key == "epsilon") p.epsilon = v;
        else if (key == "beta") p.beta = v;
        else if (key == "rho") p.rho = v;
        else if (key == "d") p.d = v;
        else if (key == "e") p.e = v;
        else throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }

    if (seen.empty()) throw ParseError(0, "scenario is empty");
    for (const char* key : {"theta", "theta_x", "eta", "alpha", "a", "delta"})
        if (!seen.contains(key)) throw ParseError(0, std::string("missing required key '") + key + "'");
    try {
        validate(p);
    } catch (const DomainError& ex) {
        throw ParseError(0, ex.what());
    }
    return p;
}

ScenarioParams load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read scenario file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string format_scenario(const ScenarioParams& p)
{
    std::string out;
    auto put = [&](std::string_view key, double v) { out += fmt::format("{} = {:.17g}\n", key, v); };
    put("theta", p.theta);
    put("theta_x", p.theta_x);
    if (p.gross_r) put("r", *p.gross_r - 1.0);
    if (p.gross_mu) put("mu", *p.gross_mu - 1.0);
    put("eta", p.eta);
    put("alpha", p.alpha);
    put("a", p.a);
    put("delta", p.delta);
    put("epsilon", p.epsilon);
    if (p.beta) put("beta", *p.beta);
    if (p.rho) put("rho", *p.rho);
    if (p.d) put("d", *p.d);
    if (p.e) put("e", *p.e);
    out += fmt::format("saving_mode = {}\n", to_string(p.saving_mode));
    return out;
}

} // namespace landspec
