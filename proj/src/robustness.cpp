#include "delcon/robustness.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "delcon/dist.hpp"
#include "delcon/solvers.hpp"

namespace delcon {

namespace {

// Best threshold-form budget by enumerating cut points.
double best_threshold_budget(const DelegationSetting& setting) {
    const auto& actions = setting.actions();
    const ActionSpec& target = actions.back();
    const std::size_t nt = setting.m() + 1;
    double best_beta = 0.0;
    for (std::size_t j0 = 0; j0 < nt; ++j0) {
        double beta = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < actions.size(); ++k) {
            double num = 0.0;
            for (std::size_t j = j0; j < nt; ++j) {
                num += target.outcome_dist[j] - actions[k].outcome_dist[j];
            }
            beta = std::min(beta, num / (target.cost - actions[k].cost));
        }
        best_beta = std::max(best_beta, beta);
    }
    return best_beta > 1e-12 ? 1.0 / best_beta : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

RobustnessSummary robustness_report(const DelegationSetting& setting) {
    RobustnessSummary summary;
    const auto& actions = setting.actions();
    int counted = 0;
    for (std::size_t idx = 1; idx < actions.size(); ++idx) {
        std::vector<ActionSpec> truncated(actions.begin(), actions.begin() + idx + 1);
        const ActionSpec& target = truncated.back();
        bool strictly_costliest = true;
        for (std::size_t k = 0; k < idx; ++k) {
            if (truncated[k].cost >= target.cost) {
                strictly_costliest = false;
                break;
            }
        }
        if (!strictly_costliest) {
            continue;
        }
        DelegationSetting sub(setting.m(), std::move(truncated));
        if (!is_implementable(sub, target.id)) {
            continue;
        }
        const SolveReport lp = min_budget_lp(sub, target.id);
        if (lp.status != SolveStatus::Optimal) {
            continue;
        }

        RobustnessRow row;
        row.action_id = target.id;
        row.min_budget_lp = lp.contract.budget();
        row.is_mlrp = is_mlrp_setting(sub);
        row.is_threshold = lp.is_threshold;
        row.is_monotone_contract = true;
        for (std::size_t j = 1; j < lp.contract.size(); ++j) {
            if (lp.contract[j] < lp.contract[j - 1] - 1e-9) {
                row.is_monotone_contract = false;
                break;
            }
        }
        row.threshold_budget = best_threshold_budget(sub);
        const SolveReport aon = full_enumeration_aon(sub, target.id);
        row.aon_budget = aon.status == SolveStatus::Optimal
                             ? aon.contract.budget()
                             : std::numeric_limits<double>::quiet_NaN();
        row.excess_threshold = (row.threshold_budget - row.min_budget_lp) / row.min_budget_lp;
        row.excess_aon = (row.aon_budget - row.min_budget_lp) / row.min_budget_lp;

        summary.rows.push_back(row);
        ++counted;
        summary.pct_mlrp += row.is_mlrp ? 1.0 : 0.0;
        summary.pct_monotone += row.is_monotone_contract ? 1.0 : 0.0;
        summary.pct_threshold += row.is_threshold ? 1.0 : 0.0;
        summary.mean_excess_threshold += row.excess_threshold;
        summary.mean_excess_aon += row.excess_aon;
    }
    if (counted > 0) {
        const double n = static_cast<double>(counted);
        summary.pct_mlrp *= 100.0 / n;
        summary.pct_monotone *= 100.0 / n;
        summary.pct_threshold *= 100.0 / n;
        summary.mean_excess_threshold /= n;
        summary.mean_excess_aon /= n;
    }
    return summary;
}

std::string robustness_to_json(const RobustnessSummary& summary) {
    nlohmann::json obj;
    obj["rows"] = nlohmann::json::array();
    for (const RobustnessRow& row : summary.rows) {
        nlohmann::json jr;
        jr["action_id"] = row.action_id;
        jr["min_budget_lp"] = row.min_budget_lp;
        jr["is_mlrp"] = row.is_mlrp;
        jr["is_monotone_contract"] = row.is_monotone_contract;
        jr["is_threshold"] = row.is_threshold;
        jr["threshold_budget"] = row.threshold_budget;
        jr["aon_budget"] = row.aon_budget;
        jr["excess_threshold"] = row.excess_threshold;
        jr["excess_aon"] = row.excess_aon;
        obj["rows"].push_back(std::move(jr));
    }
    obj["aggregates"]["pct_mlrp"] = summary.pct_mlrp;
    obj["aggregates"]["pct_monotone"] = summary.pct_monotone;
    obj["aggregates"]["pct_threshold"] = summary.pct_threshold;
    obj["aggregates"]["mean_excess_threshold"] = summary.mean_excess_threshold;
    obj["aggregates"]["mean_excess_aon"] = summary.mean_excess_aon;
    return obj.dump(2) + "\n";
}

}  // namespace delcon
