#include "delcon/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace delcon {

OutcomeDistribution binomial_pmf(int m, double p) {
    if (m < 1) {
        throw InputError("binomial_pmf requires m >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("binomial p must lie in [0,1]");
    }
    std::vector<double> probs(m + 1, 0.0);
    if (p == 0.0) {
        probs[0] = 1.0;
        return OutcomeDistribution(std::move(probs));
    }
    if (p == 1.0) {
        probs[m] = 1.0;
        return OutcomeDistribution(std::move(probs));
    }
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double lgamma_m1 = std::lgamma(m + 1.0);
    double sum = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double log_coef = lgamma_m1 - std::lgamma(j + 1.0) - std::lgamma(m - j + 1.0);
        probs[j] = std::exp(log_coef + j * log_p + (m - j) * log_q);
        sum += probs[j];
    }
    // Renormalize the rounding residual so the invariant holds for large m.
    for (double& v : probs) {
        v /= sum;
    }
    return OutcomeDistribution(std::move(probs));
}

OutcomeDistribution binomial_mixture(int m, const std::vector<double>& accuracies) {
    if (accuracies.empty()) {
        throw InputError("binomial_mixture requires a nonempty accuracy list");
    }
    std::vector<double> probs(m + 1, 0.0);
    for (double a : accuracies) {
        const OutcomeDistribution component = binomial_pmf(m, a);
        for (int j = 0; j <= m; ++j) {
            probs[j] += component[j];
        }
    }
    const double r = static_cast<double>(accuracies.size());
    for (double& v : probs) {
        v /= r;
    }
    return OutcomeDistribution(std::move(probs));
}

double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (p.size() != q.size()) {
        throw InputError("total_variation requires equal-length distributions");
    }
    double tv = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        tv += std::max(q[j] - p[j], 0.0);
    }
    return tv;
}

double survival(const OutcomeDistribution& p, int j) {
    const int m = static_cast<int>(p.size()) - 1;
    if (j < -1 || j > m) {
        throw InputError("survival index out of range");
    }
    double s = 0.0;
    for (int jj = j + 1; jj <= m; ++jj) {
        s += p[jj];
    }
    return s;
}

bool is_mlr(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (p.size() != q.size()) {
        throw InputError("is_mlr requires equal-length distributions");
    }
    // Ratios over the union of supports: finite, then +inf; a zero ratio may
    // only appear before any positive one.
    double last_ratio = -std::numeric_limits<double>::infinity();
    bool seen_infinite = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0.0 && q[j] == 0.0) {
            continue;
        }
        if (p[j] == 0.0) {
            seen_infinite = true;
            continue;
        }
        if (seen_infinite) {
            return false;  // finite ratio after an infinite one
        }
        const double ratio = q[j] / p[j];
        if (ratio < last_ratio) {
            return false;
        }
        last_ratio = ratio;
    }
    return true;
}

bool is_mlrp_setting(const DelegationSetting& setting) {
    const auto& actions = setting.actions();
    for (std::size_t i = 0; i < actions.size(); ++i) {
        for (std::size_t k = i + 1; k < actions.size(); ++k) {
            if (actions[i].cost < actions[k].cost &&
                !is_mlr(actions[i].outcome_dist, actions[k].outcome_dist)) {
                return false;
            }
        }
    }
    return true;
}

CrossingPoint crossing_point(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (!is_mlr(p, q)) {
        throw PreconditionError("crossing_point requires P MLR Q");
    }
    bool distinct = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] != q[j]) {
            distinct = true;
            break;
        }
    }
    if (!distinct) {
        throw PreconditionError("crossing_point requires distinct distributions");
    }
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (q[j - 1] < p[j - 1] && q[j] >= p[j]) {
            return CrossingPoint{static_cast<int>(j)};
        }
    }
    throw PreconditionError("no crossing point found; MLR pair expected");
}

std::vector<std::pair<double, double>> crossing_survivals(const DelegationSetting& setting) {
    if (!is_mlrp_setting(setting)) {
        throw PreconditionError("crossing_survivals requires an MLRP setting");
    }
    const auto& actions = setting.actions();
    const std::size_t n = actions.size();
    const CrossingPoint j_star =
        crossing_point(actions[n - 2].outcome_dist, actions[n - 1].outcome_dist);
    std::vector<std::pair<double, double>> result;
    result.reserve(n);
    for (const ActionSpec& a : actions) {
        result.emplace_back(a.cost, survival(a.outcome_dist, j_star.j_star - 1));
    }
    return result;
}

bool is_concave_chain(const std::vector<std::pair<double, double>>& points) {
    constexpr double kSlopeTol = 1e-12;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first <= points[i - 1].first) {
            throw InputError("is_concave_chain requires strictly increasing x");
        }
    }
    double prev_slope = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double slope =
            (points[i].second - points[i - 1].second) / (points[i].first - points[i - 1].first);
        if (slope > prev_slope + kSlopeTol) {
            return false;
        }
        prev_slope = slope;
    }
    return true;
}

}  // namespace delcon
