#include "delcon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace delcon {

namespace {

using nlohmann::json;

json setting_to_obj(const DelegationSetting& setting) {
    json obj;
    obj["m"] = setting.m();
    obj["actions"] = json::array();
    for (const ActionSpec& a : setting.actions()) {
        json ja;
        ja["id"] = a.id;
        ja["n_samples"] = a.n_samples;
        ja["cost"] = a.cost;
        ja["pmf"] = a.outcome_dist.probs();
        if (a.expected_accuracy) {
            ja["expected_accuracy"] = *a.expected_accuracy;
        }
        obj["actions"].push_back(std::move(ja));
    }
    return obj;
}

}  // namespace

std::string setting_to_json(const DelegationSetting& setting) {
    return setting_to_obj(setting).dump(2) + "\n";
}

DelegationSetting setting_from_json(const std::string& text) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("setting file is not valid JSON: ") + e.what());
    }
    try {
        const int m = obj.at("m").get<int>();
        std::vector<ActionSpec> actions;
        for (const json& ja : obj.at("actions")) {
            std::optional<double> acc;
            if (ja.contains("expected_accuracy")) {
                acc = ja.at("expected_accuracy").get<double>();
            }
            actions.emplace_back(ja.at("id").get<int>(), ja.at("n_samples").get<long>(),
                                 ja.at("cost").get<double>(),
                                 OutcomeDistribution(ja.at("pmf").get<std::vector<double>>()), acc);
        }
        return DelegationSetting(m, std::move(actions));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed setting document: ") + e.what());
    }
}

std::string report_to_json(const SolveReport& report) {
    json obj;
    obj["target_action"] = report.target_action;
    obj["budget"] = report.contract.budget();
    obj["payments"] = report.contract.payments();
    obj["solver"] = report.solver_name;
    obj["status"] = report.status == SolveStatus::Optimal ? "optimal" : "infeasible";
    json diag;
    if (report.dual_objective) {
        diag["dual_objective"] = *report.dual_objective;
    }
    diag["is_threshold"] = report.is_threshold;
    diag["is_all_or_nothing"] = report.is_all_or_nothing;
    diag["binding_ic_actions"] = report.binding_ic_actions;
    if (!report.violating_actions.empty()) {
        diag["violating_actions"] = report.violating_actions;
    }
    obj["diagnostics"] = std::move(diag);
    return obj.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open file for writing: " + path);
    }
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DelegationSetting read_setting_file(const std::string& path) {
    return setting_from_json(read_text_file(path));
}

void write_setting_file(const std::string& path, const DelegationSetting& setting) {
    write_text_file(path, setting_to_json(setting));
}

void write_report_file(const std::string& path, const SolveReport& report) {
    write_text_file(path, report_to_json(report));
}

Contract contract_from_json(const std::string& text) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("contract file is not valid JSON: ") + e.what());
    }
    try {
        return Contract(obj.at("payments").get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed contract document: ") + e.what());
    }
}

Contract read_contract_file(const std::string& path) {
    return contract_from_json(read_text_file(path));
}

CurveSamples read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,accuracy", 0) != 0) {
        throw InputError("samples CSV must start with header 'n,accuracy'");
    }
    CurveSamples samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw InputError("malformed CSV row at line " + std::to_string(line_no));
        }
        try {
            samples.add(std::stol(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::logic_error&) {
            throw InputError("malformed CSV row at line " + std::to_string(line_no));
        }
    }
    return samples;
}

void write_samples_csv(const std::string& path, const CurveSamples& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open file for writing: " + path);
    }
    out << "n,accuracy\n";
    out.precision(17);
    for (const CurveSamples::Record& r : samples.records) {
        out << r.n << ',' << r.accuracy << '\n';
    }
}

}  // namespace delcon
