#include "delcon/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace delcon {

namespace {

constexpr double kSnapTol = 1e-7;
constexpr double kBindTol = 1e-7;

// Snap payments within kSnapTol of 0 or of the max, then classify the shape.
void classify_shape(SolveReport& report) {
    const auto& t = report.contract.payments();
    const double b = report.contract.budget();
    std::vector<double> snapped(t);
    for (double& v : snapped) {
        if (std::abs(v) <= kSnapTol) {
            v = 0.0;
        } else if (std::abs(v - b) <= kSnapTol) {
            v = b;
        }
    }
    report.is_all_or_nothing = true;
    for (double v : snapped) {
        if (v != 0.0 && v != b) {
            report.is_all_or_nothing = false;
            break;
        }
    }
    report.is_threshold = report.is_all_or_nothing;
    if (report.is_threshold) {
        bool in_suffix = false;
        for (double v : snapped) {
            if (v == b && b > 0.0) {
                in_suffix = true;
            } else if (in_suffix && v == 0.0) {
                report.is_threshold = false;
                break;
            }
        }
    }
}

void record_binding_ic(SolveReport& report, const DelegationSetting& setting, int target) {
    const double u_target = agent_utility(setting, report.contract, target);
    report.binding_ic_actions.clear();
    for (const ActionSpec& a : setting.actions()) {
        if (a.id == target) {
            continue;
        }
        if (u_target - agent_utility(setting, report.contract, a.id) < kBindTol) {
            report.binding_ic_actions.push_back(a.id);
        }
    }
}

// IC rows in t-space: sum_j (F_i' - F_i)_j t_j <= c_i' - c_i for each i' != i.
void add_ic_rows(LinearProgram& lp, const DelegationSetting& setting, std::size_t target_idx,
                 std::size_t extra_vars) {
    const auto& actions = setting.actions();
    const auto& fi = actions[target_idx].outcome_dist;
    const std::size_t width = fi.size() + extra_vars;
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (i == target_idx) {
            continue;
        }
        std::vector<double> row(width, 0.0);
        for (std::size_t j = 0; j < fi.size(); ++j) {
            row[j] = actions[i].outcome_dist[j] - fi[j];
        }
        lp.add_row(std::move(row), RowSense::LessEqual, actions[i].cost - actions[target_idx].cost);
    }
}

SolveReport make_report(const DelegationSetting& setting, int target, std::string name,
                        Contract contract) {
    SolveReport report;
    report.contract = std::move(contract);
    report.target_action = target;
    report.solver_name = std::move(name);
    report.status = SolveStatus::Optimal;
    classify_shape(report);
    record_binding_ic(report, setting, target);
    return report;
}

SolveReport infeasible_report(int target, std::string name, int m) {
    SolveReport report;
    report.contract = Contract::zero(m);
    report.target_action = target;
    report.solver_name = std::move(name);
    report.status = SolveStatus::Infeasible;
    return report;
}

}  // namespace

SolveReport min_budget_lp(const DelegationSetting& setting, int target) {
    const std::size_t i = setting.index_of(target);
    const std::size_t nt = setting.m() + 1;

    // Variables: t_0..t_m, B. Minimize B subject to t_j <= B and IC.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Minimize;
    lp.objective.assign(nt + 1, 0.0);
    lp.objective[nt] = 1.0;
    for (std::size_t j = 0; j < nt; ++j) {
        std::vector<double> row(nt + 1, 0.0);
        row[j] = 1.0;
        row[nt] = -1.0;
        lp.add_row(std::move(row), RowSense::LessEqual, 0.0);
    }
    add_ic_rows(lp, setting, i, 1);

    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
        return infeasible_report(target, "lp", setting.m());
    }
    std::vector<double> payments(sol.x.begin(), sol.x.begin() + nt);
    for (double& v : payments) {
        v = std::max(v, 0.0);
    }
    SolveReport report = make_report(setting, target, "lp", Contract(std::move(payments)));
    report.dual_objective = min_budget_dual(setting, target);
    return report;
}

double min_budget_dual(const DelegationSetting& setting, int target) {
    const std::size_t i = setting.index_of(target);
    const auto& actions = setting.actions();
    const std::size_t n = actions.size();
    const std::size_t nt = setting.m() + 1;
    const auto& fi = actions[i].outcome_dist;

    // Variables: lambda_{i'} for each competitor, then mu_0..mu_m.
    std::vector<std::size_t> competitors;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != i) {
            competitors.push_back(k);
        }
    }
    const std::size_t nl = competitors.size();

    LinearProgram lp;
    lp.sense = ObjectiveSense::Maximize;
    lp.objective.assign(nl + nt, 0.0);
    for (std::size_t k = 0; k < nl; ++k) {
        lp.objective[k] = actions[i].cost - actions[competitors[k]].cost;
    }
    for (std::size_t j = 0; j < nt; ++j) {
        std::vector<double> row(nl + nt, 0.0);
        for (std::size_t k = 0; k < nl; ++k) {
            row[k] = fi[j] - actions[competitors[k]].outcome_dist[j];
        }
        row[nl + j] = -1.0;
        lp.add_row(std::move(row), RowSense::LessEqual, 0.0);
    }
    {
        std::vector<double> row(nl + nt, 0.0);
        for (std::size_t j = 0; j < nt; ++j) {
            row[nl + j] = 1.0;
        }
        lp.add_row(std::move(row), RowSense::LessEqual, 1.0);
    }

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Unbounded) {
        throw PreconditionError("target action is not implementable (unbounded dual)");
    }
    if (sol.status != LpStatus::Optimal) {
        throw NumericalError("dual LP did not solve to optimality");
    }
    return sol.objective_value;
}

SolveReport min_budget_statistical(const DelegationSetting& setting, int target, bool binary) {
    const std::size_t i = setting.index_of(target);
    const auto& actions = setting.actions();
    const double ci = actions[i].cost;
    for (std::size_t k = 0; k < actions.size(); ++k) {
        if (k != i && actions[k].cost >= ci) {
            // The transformation divides by cost gaps; defer to the direct LP.
            return min_budget_lp(setting, target);
        }
    }
    const std::size_t nt = setting.m() + 1;
    const auto& fi = actions[i].outcome_dist;

    // Variables: phi_0..phi_m in [0,1], beta >= 0. Maximize beta subject to
    // sum_j (F_i' - F_i)_j phi_j + (c_i - c_i') beta <= 0.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Maximize;
    lp.objective.assign(nt + 1, 0.0);
    lp.objective[nt] = 1.0;
    lp.lower.assign(nt + 1, 0.0);
    lp.upper.assign(nt + 1, 1.0);
    lp.upper[nt] = kLpInfinity;
    for (std::size_t k = 0; k < actions.size(); ++k) {
        if (k == i) {
            continue;
        }
        std::vector<double> row(nt + 1, 0.0);
        for (std::size_t j = 0; j < nt; ++j) {
            row[j] = actions[k].outcome_dist[j] - fi[j];
        }
        row[nt] = ci - actions[k].cost;
        lp.add_row(std::move(row), RowSense::LessEqual, 0.0);
    }

    const char* name = binary ? "mip" : "statistical";
    LpSolution sol;
    if (binary) {
        std::vector<int> phi_vars(nt);
        for (std::size_t j = 0; j < nt; ++j) {
            phi_vars[j] = static_cast<int>(j);
        }
        sol = solve_binary(lp, phi_vars);
    } else {
        sol = solve_lp(lp);
    }
    if (sol.status != LpStatus::Optimal || sol.x[nt] <= 1e-12) {
        return infeasible_report(target, name, setting.m());
    }
    const double beta = sol.x[nt];
    std::vector<double> payments(nt, 0.0);
    for (std::size_t j = 0; j < nt; ++j) {
        payments[j] = std::max(sol.x[j], 0.0) / beta;
    }
    SolveReport report = make_report(setting, target, name, Contract(std::move(payments)));
    if (!binary) {
        report.dual_objective = min_budget_dual(setting, target);
    }
    return report;
}

SolveReport two_action_closed_form(const OutcomeDistribution& f1, const OutcomeDistribution& f2,
                                   double c1, double c2) {
    if (f1.size() != f2.size()) {
        throw InputError("two_action_closed_form requires equal-length distributions");
    }
    if (!(c2 > c1)) {
        throw PreconditionError("two_action_closed_form requires c2 > c1");
    }
    const double tv = total_variation(f1, f2);
    const int m = static_cast<int>(f1.size()) - 1;
    if (tv <= 0.0) {
        return infeasible_report(2, "two-action", m);
    }
    const double budget = (c2 - c1) / tv;
    std::vector<double> payments(f1.size(), 0.0);
    for (std::size_t j = 0; j < f1.size(); ++j) {
        if (f2[j] >= f1[j]) {
            payments[j] = budget;
        }
    }
    DelegationSetting pair(m, {ActionSpec(1, 0, c1, f1), ActionSpec(2, 0, c2, f2)});
    return make_report(pair, 2, "two-action", Contract(std::move(payments)));
}

SolveReport local_threshold(const DelegationSetting& setting) {
    if (!is_mlrp_setting(setting)) {
        throw PreconditionError("local_threshold requires an MLRP setting");
    }
    const auto& actions = setting.actions();
    const std::size_t n = actions.size();
    const ActionSpec& top = actions[n - 1];
    const ActionSpec& runner_up = actions[n - 2];
    const double tv = total_variation(runner_up.outcome_dist, top.outcome_dist);
    if (tv <= 0.0) {
        return infeasible_report(top.id, "local", setting.m());
    }
    const CrossingPoint j_star = crossing_point(runner_up.outcome_dist, top.outcome_dist);
    const double budget = (top.cost - runner_up.cost) / tv;
    std::vector<double> payments(setting.m() + 1, 0.0);
    for (int j = j_star.j_star; j <= setting.m(); ++j) {
        payments[j] = budget;
    }
    SolveReport report = make_report(setting, top.id, "local", Contract(std::move(payments)));
    const double u_target = agent_utility(setting, report.contract, top.id);
    for (const ActionSpec& a : actions) {
        if (a.id != top.id && agent_utility(setting, report.contract, a.id) > u_target + 1e-9) {
            report.violating_actions.push_back(a.id);
        }
    }
    if (!report.violating_actions.empty()) {
        report.status = SolveStatus::Infeasible;
    }
    return report;
}

SolveReport full_enumeration_aon(const DelegationSetting& setting, int target) {
    const std::size_t i = setting.index_of(target);
    const auto& actions = setting.actions();
    const std::size_t nt = setting.m() + 1;
    if (nt > 24) {
        throw ResourceError("full enumeration supports at most 24 outcomes");
    }
    for (std::size_t k = 0; k < actions.size(); ++k) {
        if (k != i && actions[k].cost >= actions[i].cost) {
            throw PreconditionError("full_enumeration_aon requires a strictly costliest target");
        }
    }
    // Per-competitor contribution of each outcome to beta*(phi).
    std::vector<std::vector<double>> contrib;
    for (std::size_t k = 0; k < actions.size(); ++k) {
        if (k == i) {
            continue;
        }
        std::vector<double> row(nt);
        const double gap = actions[i].cost - actions[k].cost;
        for (std::size_t j = 0; j < nt; ++j) {
            row[j] = (actions[i].outcome_dist[j] - actions[k].outcome_dist[j]) / gap;
        }
        contrib.push_back(std::move(row));
    }

    // Gray-code walk: one bit flips between consecutive masks.
    std::vector<double> sums(contrib.size(), 0.0);
    std::uint32_t prev_gray = 0;
    double best_beta = 0.0;
    std::uint32_t best_gray = 0;
    const std::uint64_t total = 1ull << nt;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const auto gray = static_cast<std::uint32_t>(idx ^ (idx >> 1));
        const std::uint32_t changed = gray ^ prev_gray;
        const int bit = __builtin_ctz(changed);
        const double sign = (gray & changed) ? 1.0 : -1.0;
        for (std::size_t k = 0; k < contrib.size(); ++k) {
            sums[k] += sign * contrib[k][bit];
        }
        prev_gray = gray;
        const double beta = *std::min_element(sums.begin(), sums.end());
        if (beta > best_beta) {
            best_beta = beta;
            best_gray = gray;
        }
    }
    if (best_beta <= 1e-12) {
        return infeasible_report(target, "enum-aon", setting.m());
    }
    std::vector<double> payments(nt, 0.0);
    for (std::size_t j = 0; j < nt; ++j) {
        if (best_gray & (1u << j)) {
            payments[j] = 1.0 / best_beta;
        }
    }
    return make_report(setting, target, "enum-aon", Contract(std::move(payments)));
}

SolveReport min_pay_lp(const DelegationSetting& setting, int target) {
    const std::size_t i = setting.index_of(target);
    const std::size_t nt = setting.m() + 1;
    LinearProgram lp;
    lp.sense = ObjectiveSense::Minimize;
    lp.objective.assign(nt, 0.0);
    for (std::size_t j = 0; j < nt; ++j) {
        lp.objective[j] = setting.actions()[i].outcome_dist[j];
    }
    add_ic_rows(lp, setting, i, 0);
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
        return infeasible_report(target, "min-pay", setting.m());
    }
    std::vector<double> payments = sol.x;
    for (double& v : payments) {
        v = std::max(v, 0.0);
    }
    return make_report(setting, target, "min-pay", Contract(std::move(payments)));
}

bool is_implementable(const DelegationSetting& setting, int target) {
    const std::size_t i = setting.index_of(target);
    const auto& actions = setting.actions();
    std::vector<std::size_t> competitors;
    for (std::size_t k = 0; k < actions.size(); ++k) {
        if (k != i) {
            competitors.push_back(k);
        }
    }
    const std::size_t nt = setting.m() + 1;

    // Cheapest convex combination of competitors matching the target pmf.
    LinearProgram lp;
    lp.sense = ObjectiveSense::Minimize;
    lp.objective.resize(competitors.size());
    for (std::size_t k = 0; k < competitors.size(); ++k) {
        lp.objective[k] = actions[competitors[k]].cost;
    }
    for (std::size_t j = 0; j < nt; ++j) {
        std::vector<double> row(competitors.size());
        for (std::size_t k = 0; k < competitors.size(); ++k) {
            row[k] = actions[competitors[k]].outcome_dist[j];
        }
        lp.add_row(std::move(row), RowSense::Equal, actions[i].outcome_dist[j]);
    }
    lp.add_row(std::vector<double>(competitors.size(), 1.0), RowSense::Equal, 1.0);

    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
        return true;  // no matching mixture exists
    }
    return sol.objective_value >= actions[i].cost - 1e-9;
}

SolveReport budget_optimal(const DelegationSetting& setting, double budget) {
    if (budget < 0.0) {
        throw InputError("budget must be nonnegative");
    }
    const auto& actions = setting.actions();

    // The zero contract always incentivizes the cheapest-tier best response.
    SolveReport best = make_report(setting, best_response(setting, Contract::zero(setting.m())).action_id,
                                   "budget-optimal", Contract::zero(setting.m()));
    double best_acc = setting.action(best.target_action).accuracy();
    double best_budget = 0.0;

    for (const ActionSpec& a : actions) {
        if (a.cost > budget || a.id == best.target_action) {
            continue;
        }
        if (!is_implementable(setting, a.id)) {
            continue;
        }
        SolveReport r = min_budget_lp(setting, a.id);
        if (r.status != SolveStatus::Optimal || r.contract.budget() > budget + 1e-9) {
            continue;
        }
        const double acc = a.accuracy();
        const bool strictly_better = acc > best_acc + 1e-12;
        const bool tie = std::abs(acc - best_acc) <= 1e-12;
        if (strictly_better || (tie && (r.contract.budget() < best_budget - 1e-12 ||
                                        (std::abs(r.contract.budget() - best_budget) <= 1e-12 &&
                                         a.id < best.target_action)))) {
            r.solver_name = "budget-optimal";
            best = std::move(r);
            best_acc = acc;
            best_budget = best.contract.budget();
        }
    }
    return best;
}

}  // namespace delcon
