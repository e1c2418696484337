#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delcon/core.hpp"
#include "delcon/dist.hpp"
#include "delcon/lp.hpp"

namespace delcon {

enum class SolveStatus { Optimal, Infeasible };

/// A solved contract plus structural diagnostics.
struct SolveReport {
    Contract contract = Contract::zero(0);
    int target_action = 0;
    std::string solver_name;
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<double> dual_objective;
    bool is_threshold = false;
    bool is_all_or_nothing = false;
    std::vector<int> binding_ic_actions;
    // Populated by local_threshold when the two-action candidate fails IC.
    std::vector<int> violating_actions;
};

/// Min-budget IC contract for the target via the primal LP.
SolveReport min_budget_lp(const DelegationSetting& setting, int target);

/// Optimal dual objective of the min-budget LP; equals the primal budget by
/// strong duality. Throws PreconditionError when the target is not
/// implementable (unbounded dual).
double min_budget_dual(const DelegationSetting& setting, int target);

/// Min-budget via the statistical transformation t_j = phi_j / beta. With
/// binary=true, phi is restricted to {0,1} (optimal all-or-nothing contract).
/// Falls back to min_budget_lp when the target is not strictly costliest.
SolveReport min_budget_statistical(const DelegationSetting& setting, int target, bool binary);

/// Closed-form two-action contract: B = (c2-c1)/TV, paid where f2 >= f1.
SolveReport two_action_closed_form(const OutcomeDistribution& f1, const OutcomeDistribution& f2,
                                   double c1, double c2);

/// Threshold contract from the top two actions' crossing point, verified IC
/// against the rest. Requires an MLRP setting targeting the costliest action.
SolveReport local_threshold(const DelegationSetting& setting);

/// Optimal all-or-nothing contract by exhaustive search over phi in {0,1}^(m+1).
SolveReport full_enumeration_aon(const DelegationSetting& setting, int target);

/// Contract minimizing expected pay under the target distribution subject to IC.
SolveReport min_pay_lp(const DelegationSetting& setting, int target);

/// Whether some contract makes the target a best response (convex-combination
/// cost criterion).
bool is_implementable(const DelegationSetting& setting, int target);

/// Best action affordable within budget B: min-budget solve per implementable
/// action, keep those within budget, maximize principal accuracy (ties: lowest
/// budget, then lowest id).
SolveReport budget_optimal(const DelegationSetting& setting, double budget);

}  // namespace delcon
