#include "delcon/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace delcon {

namespace {
constexpr double kNormalizationTol = 1e-9;
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw InputError("outcome distribution must have at least one entry");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw InputError("outcome distribution entries must be nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormalizationTol) {
        throw InputError("outcome distribution must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

double OutcomeDistribution::mean_outcome() const {
    double mean = 0.0;
    for (std::size_t j = 0; j < probs_.size(); ++j) {
        mean += static_cast<double>(j) * probs_[j];
    }
    return mean;
}

ActionSpec::ActionSpec(int id, long n_samples, double cost, OutcomeDistribution dist,
                       std::optional<double> expected_accuracy)
    : id(id),
      n_samples(n_samples),
      cost(cost),
      outcome_dist(std::move(dist)),
      expected_accuracy(expected_accuracy) {
    if (cost < 0.0) {
        throw InputError("action cost must be nonnegative");
    }
    if (n_samples < 0) {
        throw InputError("n_samples must be nonnegative");
    }
    if (expected_accuracy && (*expected_accuracy < 0.0 || *expected_accuracy > 1.0)) {
        throw InputError("expected_accuracy must lie in [0,1]");
    }
}

double ActionSpec::accuracy() const {
    if (expected_accuracy) {
        return *expected_accuracy;
    }
    const auto m = static_cast<double>(outcome_dist.size() - 1);
    return m > 0.0 ? outcome_dist.mean_outcome() / m : outcome_dist.mean_outcome();
}

DelegationSetting::DelegationSetting(int m, std::vector<ActionSpec> actions)
    : m_(m), actions_(std::move(actions)) {
    if (m_ < 1) {
        throw InputError("validation set size m must be positive");
    }
    if (actions_.size() < 2) {
        throw InputError("setting requires at least 2 actions");
    }
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (actions_[i].outcome_dist.size() != static_cast<std::size_t>(m_) + 1) {
            throw InputError("every outcome distribution must have m+1 entries");
        }
        if (i > 0 && actions_[i].cost < actions_[i - 1].cost) {
            throw InputError("actions must be sorted by nondecreasing cost");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (actions_[k].id == actions_[i].id) {
                throw InputError("duplicate action id " + std::to_string(actions_[i].id));
            }
        }
    }
}

const ActionSpec& DelegationSetting::action(int id) const { return actions_[index_of(id)]; }

std::size_t DelegationSetting::index_of(int id) const {
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (actions_[i].id == id) {
            return i;
        }
    }
    throw InputError("unknown action id " + std::to_string(id));
}

Contract::Contract(std::vector<double> payments) : payments_(std::move(payments)) {
    if (payments_.empty()) {
        throw InputError("contract must have at least one payment");
    }
    for (double t : payments_) {
        if (!(t >= 0.0)) {
            throw InputError("contract payments must be nonnegative");
        }
    }
    budget_ = *std::max_element(payments_.begin(), payments_.end());
}

double agent_utility(const DelegationSetting& setting, const Contract& contract, int action_id) {
    const ActionSpec& a = setting.action(action_id);
    if (contract.size() != static_cast<std::size_t>(setting.m()) + 1) {
        throw InputError("contract length does not match setting");
    }
    double pay = 0.0;
    for (std::size_t j = 0; j < contract.size(); ++j) {
        pay += a.outcome_dist[j] * contract[j];
    }
    return pay - a.cost;
}

BestResponse best_response(const DelegationSetting& setting, const Contract& contract) {
    BestResponse br;
    br.utilities_all.reserve(setting.num_actions());
    // Ties go to the highest-cost maximizer; the tolerance absorbs solver
    // residue on binding incentive constraints, where utilities are equal up
    // to roundoff.
    constexpr double kTieTol = 1e-9;
    for (std::size_t i = 0; i < setting.num_actions(); ++i) {
        br.utilities_all.push_back(agent_utility(setting, contract, setting.actions()[i].id));
    }
    const double umax = *std::max_element(br.utilities_all.begin(), br.utilities_all.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < setting.num_actions(); ++i) {
        if (br.utilities_all[i] >= umax - kTieTol) {
            best = i;
        }
    }
    br.action_id = setting.actions()[best].id;
    br.utility = br.utilities_all[best];
    return br;
}

Contract make_ir(const DelegationSetting& setting, const Contract& contract) {
    const double c1 = setting.actions().front().cost;
    std::vector<double> shifted = contract.payments();
    for (double& t : shifted) {
        t += c1;
    }
    return Contract(std::move(shifted));
}

double principal_value(const DelegationSetting& setting, const Contract& contract) {
    return setting.action(best_response(setting, contract).action_id).accuracy();
}

}  // namespace delcon
