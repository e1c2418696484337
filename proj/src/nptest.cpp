#include "delcon/nptest.hpp"

#include <cmath>

namespace delcon {

HypothesisTest::HypothesisTest(std::vector<double> psi_) : psi(std::move(psi_)) {
    if (psi.empty()) {
        throw InputError("hypothesis test must have at least one entry");
    }
    for (double v : psi) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InputError("test entries must lie in [0,1]");
        }
    }
}

HypothesisTest contract_to_test(const Contract& contract) {
    if (contract.budget() <= 0.0) {
        throw InputError("contract_to_test requires a positive budget");
    }
    std::vector<double> psi(contract.size());
    for (std::size_t j = 0; j < contract.size(); ++j) {
        psi[j] = contract[j] / contract.budget();
    }
    return HypothesisTest(std::move(psi));
}

Contract test_to_contract(const HypothesisTest& test, double budget) {
    if (!(budget > 0.0)) {
        throw InputError("test_to_contract requires B > 0");
    }
    std::vector<double> payments(test.psi.size());
    for (std::size_t j = 0; j < payments.size(); ++j) {
        payments[j] = test.psi[j] * budget;
    }
    return Contract(std::move(payments));
}

HypothesisTest likelihood_ratio_test(const OutcomeDistribution& f1,
                                     const OutcomeDistribution& f2) {
    if (f1.size() != f2.size()) {
        throw InputError("likelihood_ratio_test requires equal-length distributions");
    }
    std::vector<double> psi(f1.size(), 0.0);
    for (std::size_t j = 0; j < f1.size(); ++j) {
        psi[j] = f2[j] >= f1[j] ? 1.0 : 0.0;
    }
    return HypothesisTest(std::move(psi));
}

double error_sum(const HypothesisTest& test, const OutcomeDistribution& f1,
                 const OutcomeDistribution& f2) {
    if (test.psi.size() != f1.size() || f1.size() != f2.size()) {
        throw InputError("error_sum requires matching lengths");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < f1.size(); ++j) {
        sum += f1[j] * test.psi[j] + f2[j] * (1.0 - test.psi[j]);
    }
    return sum;
}

bool verify_equivalence(const DelegationSetting& setting, const Contract& contract) {
    if (setting.num_actions() != 2) {
        throw InputError("verify_equivalence requires exactly two actions");
    }
    const OutcomeDistribution& f1 = setting.actions()[0].outcome_dist;
    const OutcomeDistribution& f2 = setting.actions()[1].outcome_dist;
    const double cost_gap = setting.actions()[1].cost - setting.actions()[0].cost;
    const double budget = contract.budget();
    if (budget <= 0.0) {
        return false;
    }
    const HypothesisTest test = contract_to_test(contract);
    const double errors = error_sum(test, f1, f2);
    if (std::abs(errors - (1.0 - cost_gap / budget)) > 1e-9) {
        return false;
    }
    // The LR test is maximum power; no test may do strictly better.
    const double lr_errors = error_sum(likelihood_ratio_test(f1, f2), f1, f2);
    return errors <= lr_errors + 1e-9;
}

}  // namespace delcon
