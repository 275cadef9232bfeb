#pragma once

#include "landspec/params.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace landspec {

/// Parses `key = value` lines; `#` starts a comment. Keys are the
/// ScenarioParams field names with net rates `r` and `mu`. Unknown and
/// duplicate keys are rejected with ParseError.
ScenarioParams parse_scenario(std::string_view text);

/// Reads and parses a scenario file. Throws ParseError when it cannot be read.
ScenarioParams load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario (17 significant digits).
std::string format_scenario(const ScenarioParams& params);

} // namespace landspec
