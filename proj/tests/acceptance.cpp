// Acceptance gate: every release-blocking behavior checked end to end, one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "delcon/core.hpp"
#include "delcon/curves.hpp"
#include "delcon/dist.hpp"
#include "delcon/hardness.hpp"
#include "delcon/nptest.hpp"
#include "delcon/solvers.hpp"

using namespace delcon;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

DelegationSetting counterexample_binomial() {
    return DelegationSetting(10, {ActionSpec(1, 10, 0.0, binomial_pmf(10, 0.5)),
                                  ActionSpec(2, 20, 0.45, binomial_pmf(10, 0.65)),
                                  ActionSpec(3, 30, 1.0, binomial_pmf(10, 0.8))});
}

bool is_ic(const DelegationSetting& setting, const Contract& contract, int target,
           double tol = 1e-7) {
    const double u = agent_utility(setting, contract, target);
    for (const ActionSpec& a : setting.actions()) {
        if (a.id != target && agent_utility(setting, contract, a.id) > u + tol) return false;
    }
    return true;
}

void criterion1() {
    DelegationSetting s = counterexample_binomial();
    SolveReport lp = min_budget_lp(s, 3);
    bool pass = lp.status == SolveStatus::Optimal;
    const std::vector<double> expected = {0, 0, 0, 0, 0, 0, 0, 1.10, 1.46, 1.46, 1.46};
    for (std::size_t j = 0; pass && j < expected.size(); ++j) {
        pass = std::abs(round2(lp.contract[j]) - expected[j]) < 1e-9;
    }
    SolveReport mip = min_budget_statistical(s, 3, true);
    SolveReport aon = full_enumeration_aon(s, 3);
    pass = pass && mip.status == SolveStatus::Optimal && aon.status == SolveStatus::Optimal;
    if (pass) {
        pass = std::abs(round2(mip.contract.budget()) - 1.51) < 1e-9 &&
               std::abs(round2(aon.contract.budget()) - 1.51) < 1e-9;
        for (int j = 0; j < 7; ++j) {
            pass = pass && mip.contract[j] < 1e-9 && aon.contract[j] < 1e-9;
        }
        pass = pass && lp.contract.budget() < aon.contract.budget();
    }
    report(1, "three-action counterexample payments and budgets", pass);
}

void criterion2() {
    DelegationSetting s(2, {ActionSpec(1, 1, 0.0, OutcomeDistribution({0.5, 0.3, 0.2})),
                            ActionSpec(2, 2, 0.45, OutcomeDistribution({0.3, 0.4, 0.3})),
                            ActionSpec(3, 3, 1.0, OutcomeDistribution({0.1, 0.35, 0.55}))});
    bool pass = is_mlrp_setting(s);
    pass = pass && !is_concave_chain(crossing_survivals(s));
    SolveReport lp = min_budget_lp(s, 3);
    pass = pass && lp.status == SolveStatus::Optimal && !lp.is_threshold;
    report(2, "minimal MLRP counterexample: non-concave chain, non-threshold optimum", pass);
}

void criterion3() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_int_distribution<int> md(2, 12);
    std::uniform_real_distribution<double> pd(0.05, 0.95);
    std::uniform_real_distribution<double> cd(0.05, 0.6);
    int checked = 0;
    double worst = 0.0;
    while (checked < 200) {
        const int n = nd(rng);
        const int m = md(rng);
        std::vector<ActionSpec> actions;
        double cost = 0.0;
        for (int i = 0; i < n; ++i) {
            actions.emplace_back(i + 1, 10 * (i + 1), cost,
                                 binomial_mixture(m, {pd(rng), pd(rng)}));
            cost += cd(rng);
        }
        DelegationSetting s(m, std::move(actions));
        const int target = s.actions().back().id;
        if (!is_implementable(s, target)) continue;
        SolveReport lp = min_budget_lp(s, target);
        if (lp.status != SolveStatus::Optimal || !lp.dual_objective) continue;
        worst = std::max(worst, std::abs(lp.contract.budget() - *lp.dual_objective));
        ++checked;
    }
    report(3, "strong duality on 200 random implementable instances", worst <= 1e-6,
           "max gap " + std::to_string(worst));
}

void criterion4() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> pd(0.1, 0.9);
    std::uniform_real_distribution<double> cd(0.1, 1.0);
    bool pass = true;
    int checked = 0;
    while (checked < 100 && pass) {
        const int m = 2 + static_cast<int>(rng() % 10);  // m+1 <= 12
        double p1 = pd(rng);
        double p2 = pd(rng);
        if (std::abs(p1 - p2) < 0.05) continue;
        OutcomeDistribution f1 = binomial_pmf(m, std::min(p1, p2));
        OutcomeDistribution f2 = binomial_pmf(m, std::max(p1, p2));
        HypothesisTest lr = likelihood_ratio_test(f1, f2);
        const double lr_errors = error_sum(lr, f1, f2);
        pass = std::abs(lr_errors - (1.0 - total_variation(f1, f2))) <= 1e-12;

        const double c2 = cd(rng);
        DelegationSetting s(m, {ActionSpec(1, 1, 0.0, f1), ActionSpec(2, 2, c2, f2)});
        SolveReport lp = min_budget_lp(s, 2);
        if (lp.status != SolveStatus::Optimal) continue;
        HypothesisTest mapped = contract_to_test(lp.contract);
        pass = pass && std::abs(error_sum(mapped, f1, f2) -
                                (1.0 - c2 / lp.contract.budget())) <= 1e-9;

        for (unsigned mask = 0; pass && mask < (1u << (m + 1)); ++mask) {
            std::vector<double> psi(m + 1, 0.0);
            for (int j = 0; j <= m; ++j) {
                if (mask & (1u << j)) psi[j] = 1.0;
            }
            pass = error_sum(HypothesisTest(psi), f1, f2) >= lr_errors - 1e-12;
        }
        ++checked;
    }
    report(4, "hypothesis-test correspondence on 100 two-action pairs", pass && checked == 100);
}

void criterion5() {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> ad(0.8, 0.98);
    std::uniform_real_distribution<double> bd(0.2, 0.5);
    std::uniform_real_distribution<double> gd(0.2, 0.6);
    std::uniform_real_distribution<double> cost_d(0.05, 0.4);
    int generated = 0;
    int discarded = 0;
    bool pass = true;
    while (generated < 100 && pass) {
        CurveModel model{ad(rng), bd(rng), gd(rng), 0.0, 0, false};
        const int m = 4 + static_cast<int>(rng() % 9);
        const int n = 3 + static_cast<int>(rng() % 3);
        std::vector<ActionSpec> actions;
        double cost = 0.0;
        double size = 50.0;
        bool distinct = true;
        double prev_acc = -1.0;
        for (int i = 0; i < n; ++i) {
            const double acc =
                std::clamp(model.predict(size * std::pow(2.0, i)), 0.05, 0.95);
            distinct = distinct && acc > prev_acc + 1e-6;
            prev_acc = acc;
            actions.emplace_back(i + 1, static_cast<long>(size * std::pow(2.0, i)), cost,
                                 binomial_pmf(m, acc));
            cost += cost_d(rng);
        }
        if (!distinct) continue;
        DelegationSetting s(m, std::move(actions));
        if (!is_mlrp_setting(s)) continue;
        ++generated;
        if (!is_concave_chain(crossing_survivals(s))) {
            ++discarded;
            continue;
        }
        SolveReport local = local_threshold(s);
        SolveReport lp = min_budget_lp(s, s.actions().back().id);
        pass = local.status == SolveStatus::Optimal && lp.status == SolveStatus::Optimal &&
               lp.is_threshold;
        for (std::size_t j = 0; pass && j < lp.contract.size(); ++j) {
            pass = std::abs(lp.contract[j] - local.contract[j]) < 1e-7;
        }
    }
    report(5, "threshold optimality on concave MLRP instances", pass,
           std::to_string(discarded) + "/100 discarded as non-concave");
}

void criterion6() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> pd(0.05, 0.95);
    std::uniform_real_distribution<double> cd(0.1, 1.0);
    bool pass = true;
    int checked = 0;
    while (checked < 500 && pass) {
        const int m = 2 + static_cast<int>(rng() % 12);
        OutcomeDistribution f1 = binomial_mixture(m, {pd(rng), pd(rng)});
        OutcomeDistribution f2 = binomial_mixture(m, {pd(rng), pd(rng)});
        const double tv = total_variation(f1, f2);
        if (tv < 1e-4) continue;
        const double c2 = cd(rng);
        SolveReport cf = two_action_closed_form(f1, f2, 0.0, c2);
        pass = cf.status == SolveStatus::Optimal &&
               std::abs(cf.contract.budget() - c2 / tv) <= 1e-12 * std::max(1.0, c2 / tv);
        DelegationSetting s(m, {ActionSpec(1, 1, 0.0, f1), ActionSpec(2, 2, c2, f2)});
        SolveReport lp = min_budget_lp(s, 2);
        pass = pass && lp.status == SolveStatus::Optimal &&
               std::abs(lp.contract.budget() - cf.contract.budget()) <= 1e-9;
        ++checked;
    }
    report(6, "two-action closed form matches (c2-c1)/TV and the LP, 500 instances", pass);
}

void criterion7() {
    bool pass = true;
    double last_max = 0.0;
    for (int m : {5, 10, 15, 20}) {
        DelegationSetting s(m, {ActionSpec(1, 1, 0.0, binomial_pmf(m, 0.5)),
                                ActionSpec(2, 2, 1.0, binomial_pmf(m, 0.8))});
        SolveReport mp = min_pay_lp(s, 2);
        SolveReport mb = min_budget_lp(s, 2);
        pass = pass && mp.status == SolveStatus::Optimal && mb.status == SolveStatus::Optimal;
        if (!pass) break;
        double nonzero_mass = 0.0;
        for (int j = 0; j < m; ++j) pass = pass && mp.contract[j] < 1e-9;
        for (int j = 0; j <= m; ++j) {
            if (mp.contract[j] > 1e-9) nonzero_mass += s.action(2).outcome_dist[j];
        }
        pass = pass && mp.contract.budget() >= last_max - 1e-9;
        pass = pass && mp.contract.budget() > mb.contract.budget();
        pass = pass && std::abs(nonzero_mass - std::pow(0.8, m)) <= 1e-12;
        last_max = mp.contract.budget();
    }
    report(7, "min-pay concentrates on the top outcome and dominates the min budget", pass);
}

void criterion8(const std::string& fixtures_dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    const fs::path dir = fs::path(fixtures_dir) / "cnf";
    if (fs::exists(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() == ".cnf") files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    bool pass = files.size() == 20;
    int verified = 0;
    for (const auto& path : files) {
        Cnf3 cnf = parse_dimacs_file(path.string());
        if (verify_reduction(cnf)) {
            ++verified;
        } else {
            pass = false;
        }
    }
    report(8, "satisfiability reduction verified on the 20-formula suite", pass,
           std::to_string(verified) + "/" + std::to_string(files.size()) + " verified");
}

double generator(double n) { return 0.9 - 0.4 * std::pow(n / 100.0, -0.3); }

void criterion9() {
    std::vector<long> sizes = {100, 200, 400, 800, 1600, 3200, 6400, 12800, 25600, 51200};
    CurveSamples clean;
    for (long n : sizes) clean.add(n, generator(static_cast<double>(n)));
    CurveModel model = fit_power_law(clean);
    bool pass = model.fit_rmse < 1e-6;

    std::vector<long> fit_sizes = {100, 200, 400, 800, 1600};
    const double target_n = 4.0 * 1600.0;
    const double truth = generator(target_n);
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::mt19937_64 rng(9000 + trial);
        std::normal_distribution<double> noise(0.0, 0.01);
        CurveSamples noisy;
        for (long n : fit_sizes) {
            for (int rep = 0; rep < 5; ++rep) {
                noisy.add(n, std::clamp(generator(static_cast<double>(n)) + noise(rng), 0.0, 1.0));
            }
        }
        CurveModel fitted = fit_power_law(noisy);
        if (std::abs(fitted.predict(target_n) - truth) < 0.02) ++hits;
    }
    pass = pass && hits >= 90;
    report(9, "power-law recovery, noiseless and noisy extrapolation", pass,
           std::to_string(hits) + "/100 noisy trials within 0.02");
}

void criterion10() {
    std::vector<long> sizes = {100, 200, 400, 800, 1600, 3200};
    CurveSamples clean;
    for (long n : sizes) clean.add(n, generator(static_cast<double>(n)));
    CurveModel truth = fit_power_law(clean);
    const int m = 10;

    // Budget headroom: small underestimates must still afford the top action,
    // so that only miscalibrated payment thresholds cause losses.
    const DelegationSetting setting_true = build_setting(truth, m, sizes, 1.0);
    const SolveReport top = min_budget_lp(setting_true, setting_true.actions().back().id);
    const double budget = top.contract.budget() * 1.2;

    double max_gap = 0.0;
    for (std::size_t i = 1; i < setting_true.num_actions(); ++i) {
        max_gap = std::max(max_gap, setting_true.actions()[i].accuracy() -
                                        setting_true.actions()[i - 1].accuracy());
    }

    const std::vector<double> deltas = {0.01, 0.025, 0.035, 0.045};
    std::vector<CurveModel> est_models;
    for (double d : deltas) {
        CurveModel over = truth;
        over.a = std::min(1.0, truth.a + d);
        est_models.push_back(over);
        CurveModel under = truth;
        under.a = truth.a - d;
        est_models.push_back(under);
    }
    std::vector<SweepPoint> points =
        estimation_error_sweep(truth, est_models, m, sizes, budget);

    bool pass = true;
    double mean_over = 0.0;
    double mean_under = 0.0;
    for (std::size_t k = 0; k < points.size(); k += 2) {
        const SweepPoint& over = points[k];
        const SweepPoint& under = points[k + 1];
        if (over.signed_error > 0.02) pass = pass && over.accuracy_loss > 0.0;
        pass = pass && under.accuracy_loss <= max_gap + 1e-9;
        mean_over += over.accuracy_loss;
        mean_under += under.accuracy_loss;
    }
    pass = pass && mean_over > mean_under;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "mean over-loss %.4f, mean under-loss %.4f",
                  mean_over / deltas.size(), mean_under / deltas.size());
    report(10, "overestimation hurts more than underestimation", pass, detail);
}

void criterion11() {
    std::mt19937_64 rng(1111);
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_int_distribution<int> md(1, 8);
    std::uniform_real_distribution<double> pd(0.05, 0.95);
    std::uniform_real_distribution<double> cd(0.05, 0.6);
    std::uniform_real_distribution<double> td(0.0, 3.0);
    bool pass = true;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        const int n = nd(rng);
        const int m = md(rng);
        std::vector<ActionSpec> actions;
        double cost = 0.0;
        for (int i = 0; i < n; ++i) {
            actions.emplace_back(i + 1, 10 * (i + 1), cost, binomial_pmf(m, pd(rng)));
            cost += cd(rng);
        }
        DelegationSetting s(m, std::move(actions));
        std::vector<double> t(m + 1);
        for (double& v : t) v = td(rng);
        Contract contract(t);
        Contract ir = make_ir(s, contract);
        BestResponse before = best_response(s, contract);
        BestResponse after = best_response(s, ir);
        pass = before.action_id == after.action_id;
        if (pass && before.action_id == s.actions().back().id) {
            // IC for the induced target: the shifted contract must be IR.
            pass = after.utility >= -1e-12;
        }
        pass = pass && after.utility >= -1e-12;
    }
    report(11, "IR shift preserves incentives and participation, 200 instances", pass);
}

void criterion12() {
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_real_distribution<double> qd(0.05, 0.95);
    std::uniform_real_distribution<double> cd(0.05, 0.6);
    bool pass = true;
    int checked = 0;
    while (checked < 100 && pass) {
        const int n = nd(rng);
        std::vector<ActionSpec> actions;
        double cost = 0.0;
        for (int i = 0; i < n; ++i) {
            const double q = qd(rng);
            actions.emplace_back(i + 1, 10 * (i + 1), cost,
                                 OutcomeDistribution({1.0 - q, q}));
            cost += cd(rng);
        }
        DelegationSetting s(1, std::move(actions));
        const int target = s.actions().back().id;
        if (!is_implementable(s, target)) continue;
        SolveReport lp = min_budget_lp(s, target);
        if (lp.status != SolveStatus::Optimal) continue;
        ++checked;
        pass = lp.is_all_or_nothing;
        if (pass && is_mlrp_setting(s)) {
            pass = lp.is_threshold;
            // Bang-for-buck value: the binding rate over success-probability gaps.
            const auto& top = s.actions().back();
            double expected = 0.0;
            for (std::size_t i = 0; i + 1 < s.num_actions(); ++i) {
                const double dq = top.outcome_dist[1] - s.actions()[i].outcome_dist[1];
                const double dc = top.cost - s.actions()[i].cost;
                if (dq > 1e-12) expected = std::max(expected, dc / dq);
            }
            pass = pass && std::abs(lp.contract.budget() - expected) <= 1e-9;
        }
    }
    report(12, "two-outcome optima are all-or-nothing with the bang-for-buck budget", pass);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixtures_dir = argc > 1 ? argv[1] : "tests/fixtures";
    const auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(fixtures_dir);
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("%d/12 criteria passed in %lld ms\n", 12 - g_failures,
                static_cast<long long>(elapsed));
    return g_failures == 0 ? 0 : 1;
}
