#pragma once

#include <string>

#include "delcon/core.hpp"
#include "delcon/curves.hpp"
#include "delcon/solvers.hpp"

namespace delcon {

// Canonical JSON schemas; reading a written file and re-writing it is
// byte-identical.

std::string setting_to_json(const DelegationSetting& setting);
DelegationSetting setting_from_json(const std::string& text);

std::string report_to_json(const SolveReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

DelegationSetting read_setting_file(const std::string& path);
void write_setting_file(const std::string& path, const DelegationSetting& setting);
void write_report_file(const std::string& path, const SolveReport& report);
Contract contract_from_json(const std::string& text);
Contract read_contract_file(const std::string& path);

/// CSV with header `n,accuracy`, one row per repetition.
CurveSamples read_samples_csv(const std::string& path);
void write_samples_csv(const std::string& path, const CurveSamples& samples);

}  // namespace delcon
