#pragma once

#include <utility>
#include <vector>

#include "delcon/core.hpp"

namespace delcon {

/// First outcome at which the costlier distribution weakly overtakes the
/// cheaper one (unique under MLR).
struct CrossingPoint {
    int j_star = 0;
};

/// Binomial(m, p) pmf, accumulated in log space.
OutcomeDistribution binomial_pmf(int m, double p);

/// Uniform mixture of Binomial(m, a) over the given accuracies.
OutcomeDistribution binomial_mixture(int m, const std::vector<double>& accuracies);

/// Total variation distance, computed as the sum of positive parts of Q - P.
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Pr[j' > j]; j = -1 returns 1.
double survival(const OutcomeDistribution& p, int j);

/// Whether Q/P has a monotone likelihood ratio. Entries with P=0,Q>0 count as
/// +inf and may only appear as a suffix; P>0,Q=0 only as a prefix; P=Q=0 are
/// skipped.
bool is_mlr(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// MLR between every cost-ordered pair of actions.
bool is_mlrp_setting(const DelegationSetting& setting);

/// The crossing point of Q over P; requires P distinct from Q and P MLR Q.
CrossingPoint crossing_point(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// (cost, survival at the top pair's crossing point) per action.
std::vector<std::pair<double, double>> crossing_survivals(const DelegationSetting& setting);

/// Whether successive slopes are nonincreasing (within 1e-12).
bool is_concave_chain(const std::vector<std::pair<double, double>>& points);

}  // namespace delcon
