#pragma once

#include <string>
#include <vector>

#include "delcon/core.hpp"

namespace delcon {

/// One target action's solver comparison (protocol: the action set is
/// truncated at the target).
struct RobustnessRow {
    int action_id = 0;
    double min_budget_lp = 0.0;
    bool is_mlrp = false;
    bool is_monotone_contract = false;
    bool is_threshold = false;
    double threshold_budget = 0.0;
    double aon_budget = 0.0;
    double excess_threshold = 0.0;
    double excess_aon = 0.0;
};

struct RobustnessSummary {
    std::vector<RobustnessRow> rows;
    double pct_mlrp = 0.0;
    double pct_monotone = 0.0;
    double pct_threshold = 0.0;
    double mean_excess_threshold = 0.0;
    double mean_excess_aon = 0.0;
};

/// Evaluate every implementable non-cheapest action as its own target.
RobustnessSummary robustness_report(const DelegationSetting& setting);

std::string robustness_to_json(const RobustnessSummary& summary);

}  // namespace delcon
