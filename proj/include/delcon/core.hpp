#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delcon/errors.hpp"

namespace delcon {

/// Probability mass over validation outcomes j = 0..m.
class OutcomeDistribution {
  public:
    explicit OutcomeDistribution(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t j) const { return probs_[j]; }

    /// E[j] under this distribution.
    double mean_outcome() const;

  private:
    std::vector<double> probs_;
};

/// One agent action: a training-set size with its cost and outcome distribution.
struct ActionSpec {
    int id = 0;
    long n_samples = 0;
    double cost = 0.0;
    OutcomeDistribution outcome_dist;
    std::optional<double> expected_accuracy;

    ActionSpec(int id, long n_samples, double cost, OutcomeDistribution dist,
               std::optional<double> expected_accuracy = std::nullopt);

    /// Supplied expected accuracy, or E[j]/m under the pmf.
    double accuracy() const;
};

/// A contract design instance: validation size m plus cost-ordered actions.
class DelegationSetting {
  public:
    DelegationSetting(int m, std::vector<ActionSpec> actions);

    int m() const { return m_; }
    const std::vector<ActionSpec>& actions() const { return actions_; }
    std::size_t num_actions() const { return actions_.size(); }

    const ActionSpec& action(int id) const;
    std::size_t index_of(int id) const;

  private:
    int m_;
    std::vector<ActionSpec> actions_;
};

/// Payment rule over outcomes; budget is the maximum payment.
class Contract {
  public:
    explicit Contract(std::vector<double> payments);

    const std::vector<double>& payments() const { return payments_; }
    double budget() const { return budget_; }
    std::size_t size() const { return payments_.size(); }
    double operator[](std::size_t j) const { return payments_[j]; }

    static Contract zero(int m) { return Contract(std::vector<double>(m + 1, 0.0)); }

  private:
    std::vector<double> payments_;
    double budget_;
};

struct BestResponse {
    int action_id = 0;
    double utility = 0.0;
    std::vector<double> utilities_all;  // one per action, in setting order
};

/// Expected payment minus cost for the given action.
double agent_utility(const DelegationSetting& setting, const Contract& contract, int action_id);

/// Utility-maximizing action; ties broken toward the highest-cost maximizer
/// (then the highest id).
BestResponse best_response(const DelegationSetting& setting, const Contract& contract);

/// Shift every payment up by the cheapest action's cost. Keeps the best
/// response and makes the agent's utility nonnegative for IC contracts.
Contract make_ir(const DelegationSetting& setting, const Contract& contract);

/// Expected accuracy of the action the contract incentivizes.
double principal_value(const DelegationSetting& setting, const Contract& contract);

}  // namespace delcon
