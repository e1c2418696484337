#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delcon/core.hpp"
#include "delcon/curves.hpp"
#include "delcon/dist.hpp"
#include "delcon/errors.hpp"
#include "delcon/hardness.hpp"
#include "delcon/io.hpp"
#include "delcon/nptest.hpp"
#include "delcon/robustness.hpp"
#include "delcon/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitResource = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        delcon::write_text_file(out_path, text);
    }
}

int run_solve(const std::string& setting_path, int target, const std::string& solver,
              const std::string& out_path) {
    const delcon::DelegationSetting setting = delcon::read_setting_file(setting_path);
    delcon::SolveReport report;
    if (solver == "lp" || solver == "dual") {
        report = delcon::min_budget_lp(setting, target);
        if (solver == "dual") {
            report.solver_name = "dual";
        }
    } else if (solver == "two-action") {
        if (setting.num_actions() != 2) {
            throw delcon::InputError("two-action solver needs exactly two actions");
        }
        const auto& a = setting.actions();
        report = delcon::two_action_closed_form(a[0].outcome_dist, a[1].outcome_dist, a[0].cost,
                                                a[1].cost);
        report.target_action = a[1].id;
    } else if (solver == "local") {
        report = delcon::local_threshold(setting);
    } else if (solver == "enum-aon") {
        report = delcon::full_enumeration_aon(setting, target);
    } else if (solver == "mip") {
        report = delcon::min_budget_statistical(setting, target, /*binary=*/true);
    } else if (solver == "min-pay") {
        report = delcon::min_pay_lp(setting, target);
    } else {
        throw delcon::InputError("unknown solver: " + solver);
    }
    emit(delcon::report_to_json(report), out_path);
    return report.status == delcon::SolveStatus::Optimal ? kExitOk : kExitInfeasible;
}

int run_budget_optimal(const std::string& setting_path, double budget,
                       const std::string& out_path) {
    const delcon::DelegationSetting setting = delcon::read_setting_file(setting_path);
    const delcon::SolveReport report = delcon::budget_optimal(setting, budget);
    emit(delcon::report_to_json(report), out_path);
    return report.status == delcon::SolveStatus::Optimal ? kExitOk : kExitInfeasible;
}

int run_fit_curve(const std::string& samples_path, const std::string& out_path) {
    const delcon::CurveSamples samples = delcon::read_samples_csv(samples_path);
    const delcon::CurveModel model = delcon::fit_power_law(samples);
    nlohmann::json obj;
    obj["a"] = model.a;
    obj["b"] = model.b;
    obj["c"] = model.c;
    obj["fit_rmse"] = model.fit_rmse;
    obj["n_fit_max"] = model.n_fit_max;
    obj["degenerate"] = model.degenerate;
    emit(obj.dump(2) + "\n", out_path);
    return kExitOk;
}

int run_build_setting(const std::string& samples_path, int m, std::vector<long> sizes,
                      double cost_per_sample, const std::string& mode, long pilot_budget,
                      int pilot_reps, std::uint64_t seed, const std::string& out_path) {
    delcon::CurveSamples samples = delcon::read_samples_csv(samples_path);
    if (pilot_budget > 0) {
        samples = delcon::sample_pilot(samples, pilot_budget, pilot_reps, seed).samples;
    }
    if (sizes.empty()) {
        sizes = samples.sizes();
    }
    delcon::DelegationSetting setting =
        mode == "mixture"
            ? delcon::build_setting(samples, m, sizes, cost_per_sample)
            : delcon::build_setting(delcon::fit_power_law(samples), m, sizes, cost_per_sample);
    emit(delcon::setting_to_json(setting), out_path);
    return kExitOk;
}

int run_simulate(const std::string& setting_path, const std::string& contract_path,
                 const std::string& out_path) {
    const delcon::DelegationSetting setting = delcon::read_setting_file(setting_path);
    const delcon::Contract contract = delcon::read_contract_file(contract_path);
    const delcon::BestResponse br = delcon::best_response(setting, contract);
    nlohmann::json obj;
    obj["best_response"] = br.action_id;
    obj["agent_utility"] = br.utility;
    obj["utilities"] = br.utilities_all;
    obj["principal_value"] = delcon::principal_value(setting, contract);
    emit(obj.dump(2) + "\n", out_path);
    return kExitOk;
}

int run_np_test(const std::string& setting_path, const std::string& contract_path,
                const std::string& out_path) {
    const delcon::DelegationSetting setting = delcon::read_setting_file(setting_path);
    if (setting.num_actions() != 2) {
        throw delcon::InputError("np-test needs a two-action setting");
    }
    const delcon::Contract contract = delcon::read_contract_file(contract_path);
    const auto& a = setting.actions();
    const delcon::HypothesisTest test = delcon::contract_to_test(contract);
    double type1 = 0.0;
    double type2 = 0.0;
    for (std::size_t j = 0; j < test.psi.size(); ++j) {
        type1 += a[0].outcome_dist[j] * test.psi[j];
        type2 += a[1].outcome_dist[j] * (1.0 - test.psi[j]);
    }
    nlohmann::json obj;
    obj["psi"] = test.psi;
    obj["type1_error"] = type1;
    obj["type2_error"] = type2;
    obj["error_sum"] = type1 + type2;
    obj["predicted_error_sum"] = 1.0 - (a[1].cost - a[0].cost) / contract.budget();
    obj["identity_holds"] = delcon::verify_equivalence(setting, contract);
    emit(obj.dump(2) + "\n", out_path);
    return kExitOk;
}

int run_reduce_3sat(const std::string& cnf_path, const std::string& out_path, bool verify) {
    const delcon::Cnf3 cnf = delcon::parse_dimacs_file(cnf_path);
    auto [setting, instance] = delcon::reduce_3sat(cnf);
    if (!out_path.empty()) {
        delcon::write_setting_file(out_path, setting);
    }
    nlohmann::json obj;
    obj["num_vars"] = cnf.num_vars;
    obj["num_clauses"] = cnf.clauses.size();
    obj["epsilon"] = instance.epsilon;
    obj["q_pos"] = instance.q_pos;
    obj["threshold"] = instance.q_pos + instance.epsilon / cnf.num_vars;
    if (verify) {
        obj["reduction_verified"] = delcon::verify_reduction(cnf);
    }
    std::cout << obj.dump(2) << "\n";
    return kExitOk;
}

int run_robustness(const std::string& setting_path, const std::string& out_path) {
    const delcon::DelegationSetting setting = delcon::read_setting_file(setting_path);
    const delcon::RobustnessSummary summary = delcon::robustness_report(setting);
    emit(delcon::robustness_to_json(summary), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Budget-optimal contract design for delegated classification"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Random seed for sampling operations");

    std::string setting_path;
    std::string contract_path;
    std::string samples_path;
    std::string cnf_path;
    std::string out_path;
    std::string solver = "lp";
    std::string mode = "fit";
    std::vector<long> sizes;
    int target = 0;
    int m = 10;
    double budget = 0.0;
    double cost_per_sample = 1.0;
    bool verify = false;

    CLI::App* solve = app.add_subcommand("solve", "Min-budget contract for a target action");
    solve->add_option("--setting", setting_path)->required();
    solve->add_option("--target", target)->required();
    solve->add_option("--solver", solver)
        ->check(CLI::IsMember({"lp", "dual", "two-action", "local", "enum-aon", "mip", "min-pay"}));
    solve->add_option("--out", out_path);

    CLI::App* bo = app.add_subcommand("budget-optimal", "Best contract within a budget cap");
    bo->add_option("--setting", setting_path)->required();
    bo->add_option("--budget", budget)->required();
    bo->add_option("--out", out_path);

    CLI::App* fit = app.add_subcommand("fit-curve", "Fit a power-law learning curve to samples");
    fit->add_option("--samples", samples_path)->required();
    fit->add_option("--out", out_path);

    CLI::App* bs = app.add_subcommand("build-setting", "Build a setting from curve samples");
    bs->add_option("--samples", samples_path)->required();
    bs->add_option("--m", m, "Validation set size");
    bs->add_option("--sizes", sizes, "Training sizes (default: sampled sizes)");
    bs->add_option("--cost-per-sample", cost_per_sample);
    bs->add_option("--mode", mode)->check(CLI::IsMember({"fit", "mixture"}));
    long pilot_budget = 0;
    int pilot_reps = 1;
    bs->add_option("--pilot-budget", pilot_budget,
                   "Subsample a pilot prefix with total sample cost <= this");
    bs->add_option("--pilot-reps", pilot_reps, "Repetitions kept per pilot size");
    bs->add_option("--out", out_path);

    CLI::App* sim = app.add_subcommand("simulate", "Agent best response under a contract");
    sim->add_option("--setting", setting_path)->required();
    sim->add_option("--contract", contract_path)->required();
    sim->add_option("--out", out_path);

    CLI::App* np = app.add_subcommand("np-test", "Hypothesis-test view of a two-action contract");
    np->add_option("--setting", setting_path)->required();
    np->add_option("--contract", contract_path)->required();
    np->add_option("--out", out_path);

    CLI::App* red = app.add_subcommand("reduce-3sat", "Encode a 3-CNF as a contract instance");
    red->add_option("--cnf", cnf_path)->required();
    red->add_option("--out", out_path);
    red->add_flag("--verify", verify, "Cross-check against exhaustive oracles");

    CLI::App* rob = app.add_subcommand("robustness", "Per-action structural report");
    rob->add_option("--setting", setting_path)->required();
    rob->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) return run_solve(setting_path, target, solver, out_path);
        if (bo->parsed()) return run_budget_optimal(setting_path, budget, out_path);
        if (fit->parsed()) return run_fit_curve(samples_path, out_path);
        if (bs->parsed())
            return run_build_setting(samples_path, m, sizes, cost_per_sample, mode, pilot_budget,
                                     pilot_reps, seed, out_path);
        if (sim->parsed()) return run_simulate(setting_path, contract_path, out_path);
        if (np->parsed()) return run_np_test(setting_path, contract_path, out_path);
        if (red->parsed()) return run_reduce_3sat(cnf_path, out_path, verify);
        if (rob->parsed()) return run_robustness(setting_path, out_path);
    } catch (const delcon::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const delcon::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const delcon::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const delcon::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
