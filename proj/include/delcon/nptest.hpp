#pragma once

#include <vector>

#include "delcon/core.hpp"

namespace delcon {

/// Per-outcome probability of rejecting the null distribution.
struct HypothesisTest {
    std::vector<double> psi;

    explicit HypothesisTest(std::vector<double> psi_);
};

/// psi = t / B; requires a positive budget.
HypothesisTest contract_to_test(const Contract& contract);

/// t = psi * B; requires B > 0.
Contract test_to_contract(const HypothesisTest& test, double budget);

/// Likelihood ratio test 1[f2(j) >= f1(j)]; ties reject toward the alternative.
HypothesisTest likelihood_ratio_test(const OutcomeDistribution& f1, const OutcomeDistribution& f2);

/// Sum of type-1 and type-2 errors: sum f1*psi + sum f2*(1-psi).
double error_sum(const HypothesisTest& test, const OutcomeDistribution& f1,
                 const OutcomeDistribution& f2);

/// Both directions of the contract/test correspondence on a two-action setting:
/// the error sum equals 1 - (c2-c1)/B and is not beaten by the LR test.
bool verify_equivalence(const DelegationSetting& setting, const Contract& contract);

}  // namespace delcon
