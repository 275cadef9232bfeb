#pragma once

#include "landspec/comparative_statics.hpp"
#include "landspec/extensions.hpp"
#include "landspec/monetary.hpp"
#include "landspec/open_economy.hpp"

#include <span>
#include <string>
#include <vector>

namespace landspec::csv {

/// 17 significant digits, shortest exponent form (`%.17g`).
std::string real(double value);

std::string path_csv(std::span<const open::PathState> path);
/// Baseline and shocked branches in one table with a leading `branch` column.
std::string shock_csv(const open::ShockPaths& paths);
std::string monetary_path_csv(std::span<const monetary::MonetaryPathState> path);
std::string unbalanced_csv(std::span<const ext::UnbalancedStep> path);
/// phi_map on `points` evenly spaced phi in [0, phi_bar), as (phi_t, phi_next) rows.
std::string map_csv(const ScenarioParams& params, int points = 101);
std::string sweep_csv(std::span<const statics::SweepRecord> records);

struct MonetarySweepRow {
    double epsilon;
    double theta;
    double theta_x;
    double mu;
    double phi_star;
    double gross_r;
    double gross_growth;
    double credit_gdp;
};

std::string monetary_sweep_csv(std::span<const MonetarySweepRow> rows);

} // namespace landspec::csv
