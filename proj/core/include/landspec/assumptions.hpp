#pragma once

#include "landspec/errors.hpp"
#include "landspec/params.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace landspec {

enum class AssumptionId { A1, A2, A3, A4, A5 };

std::string_view to_string(AssumptionId id);

/// One parameter restriction of the form lhs < rhs. `slack` is rhs - lhs and
/// the restriction holds iff slack > 0 (no tolerance).
struct AssumptionRecord {
    AssumptionId id;
    bool holds;
    double lhs;
    double rhs;
    double slack;
};

struct AssumptionReport {
    std::vector<AssumptionRecord> records;

    bool all_hold() const;
    const AssumptionRecord* find(AssumptionId id) const;
    /// Comma separated ids of failing records, empty when all hold.
    std::string failures() const;
};

/// Evaluates the restrictions that apply to `economy`.
///
/// Open economy: A1 (finite capital leverage) and A2 (positive land value
/// when land is unproductive). Monetary economy: A3 (finite leverage at the
/// endogenous rate) and A4. A3 refers to phi*; with epsilon > 0 it is only
/// reported when `phi_star` is supplied. A5 (land return above rent growth)
/// is added whenever `d` is set in the open economy. Never throws.
AssumptionReport check_assumptions(const ScenarioParams& params, Economy economy,
                                   std::optional<double> phi_star = std::nullopt);

class AssumptionViolated : public Error {
public:
    explicit AssumptionViolated(AssumptionReport report);

    const AssumptionReport& report() const noexcept { return report_; }

private:
    AssumptionReport report_;
};

} // namespace landspec
