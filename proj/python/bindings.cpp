#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "delcon/core.hpp"
#include "delcon/curves.hpp"
#include "delcon/dist.hpp"
#include "delcon/errors.hpp"
#include "delcon/io.hpp"
#include "delcon/nptest.hpp"
#include "delcon/robustness.hpp"
#include "delcon/solvers.hpp"

namespace py = pybind11;
using namespace delcon;

namespace {

std::vector<double> pmf_list(const OutcomeDistribution& d) { return d.probs(); }

DelegationSetting make_setting(int m, const std::vector<py::dict>& actions) {
    std::vector<ActionSpec> specs;
    for (const py::dict& a : actions) {
        std::optional<double> acc;
        if (a.contains("expected_accuracy")) {
            acc = a["expected_accuracy"].cast<double>();
        }
        specs.emplace_back(a["id"].cast<int>(), a["n_samples"].cast<long>(),
                           a["cost"].cast<double>(),
                           OutcomeDistribution(a["pmf"].cast<std::vector<double>>()), acc);
    }
    return DelegationSetting(m, std::move(specs));
}

}  // namespace

PYBIND11_MODULE(_delcon, mod) {
    mod.doc() = "Budget-optimal contract design for delegated classification";

    py::register_exception<InputError>(mod, "InputError");
    py::register_exception<PreconditionError>(mod, "PreconditionError");
    py::register_exception<NumericalError>(mod, "NumericalError");
    py::register_exception<ResourceError>(mod, "ResourceError");

    py::class_<OutcomeDistribution>(mod, "OutcomeDistribution")
        .def(py::init<std::vector<double>>())
        .def_property_readonly("probs", &pmf_list)
        .def("mean_outcome", &OutcomeDistribution::mean_outcome);

    py::class_<DelegationSetting>(mod, "DelegationSetting")
        .def(py::init(&make_setting), py::arg("m"), py::arg("actions"))
        .def_property_readonly("m", &DelegationSetting::m)
        .def_property_readonly("num_actions", &DelegationSetting::num_actions)
        .def("to_json", [](const DelegationSetting& s) { return setting_to_json(s); })
        .def_static("from_json",
                    [](const std::string& text) { return setting_from_json(text); });

    py::class_<Contract>(mod, "Contract")
        .def(py::init<std::vector<double>>())
        .def_property_readonly("payments", &Contract::payments)
        .def_property_readonly("budget", &Contract::budget);

    py::class_<SolveReport>(mod, "SolveReport")
        .def_property_readonly("contract", [](const SolveReport& r) { return r.contract; })
        .def_property_readonly("target_action",
                               [](const SolveReport& r) { return r.target_action; })
        .def_property_readonly("solver", [](const SolveReport& r) { return r.solver_name; })
        .def_property_readonly("optimal",
                               [](const SolveReport& r) {
                                   return r.status == SolveStatus::Optimal;
                               })
        .def_property_readonly("dual_objective",
                               [](const SolveReport& r) { return r.dual_objective; })
        .def_property_readonly("is_threshold",
                               [](const SolveReport& r) { return r.is_threshold; })
        .def_property_readonly("is_all_or_nothing",
                               [](const SolveReport& r) { return r.is_all_or_nothing; })
        .def("to_json", [](const SolveReport& r) { return report_to_json(r); });

    mod.def("binomial_pmf", &binomial_pmf, py::arg("m"), py::arg("p"));
    mod.def("total_variation", &total_variation);
    mod.def("is_mlrp_setting", &is_mlrp_setting);

    mod.def("min_budget", &min_budget_lp, py::arg("setting"), py::arg("target"));
    mod.def("min_budget_all_or_nothing",
            [](const DelegationSetting& s, int target) {
                return min_budget_statistical(s, target, true);
            },
            py::arg("setting"), py::arg("target"));
    mod.def("min_pay", &min_pay_lp, py::arg("setting"), py::arg("target"));
    mod.def("budget_optimal", &budget_optimal, py::arg("setting"), py::arg("budget"));
    mod.def("is_implementable", &is_implementable, py::arg("setting"), py::arg("target"));

    mod.def("best_response",
            [](const DelegationSetting& s, const Contract& t) {
                BestResponse br = best_response(s, t);
                py::dict out;
                out["action_id"] = br.action_id;
                out["utility"] = br.utility;
                out["utilities"] = br.utilities_all;
                return out;
            });
    mod.def("make_ir", &make_ir);
    mod.def("principal_value", &principal_value);

    mod.def("fit_power_law",
            [](const std::vector<std::pair<long, double>>& points) {
                CurveSamples samples;
                for (const auto& [n, acc] : points) samples.add(n, acc);
                CurveModel model = fit_power_law(samples);
                py::dict out;
                out["a"] = model.a;
                out["b"] = model.b;
                out["c"] = model.c;
                out["fit_rmse"] = model.fit_rmse;
                out["degenerate"] = model.degenerate;
                return out;
            });
    mod.def("build_setting_from_samples",
            [](const std::vector<std::pair<long, double>>& points, int m,
               const std::vector<long>& sizes, double cost_per_sample) {
                CurveSamples samples;
                for (const auto& [n, acc] : points) samples.add(n, acc);
                return build_setting(fit_power_law(samples), m, sizes, cost_per_sample);
            },
            py::arg("points"), py::arg("m"), py::arg("sizes"), py::arg("cost_per_sample"));

    mod.def("robustness_report",
            [](const DelegationSetting& s) { return robustness_to_json(robustness_report(s)); });
}
