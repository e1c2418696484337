#include "delcon/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "delcon/dist.hpp"
#include "delcon/solvers.hpp"

namespace delcon {

namespace {
constexpr double kMinB = 1e-9;
constexpr double kCLow = 0.01;
constexpr double kCHigh = 2.0;
}

void CurveSamples::add(long n, double accuracy) {
    if (n < 1) {
        throw InputError("training size must be at least 1");
    }
    if (!(accuracy >= 0.0 && accuracy <= 1.0)) {
        throw InputError("accuracy must lie in [0,1]");
    }
    records.push_back({n, accuracy});
}

std::vector<long> CurveSamples::sizes() const {
    std::vector<long> out;
    for (const Record& r : records) {
        out.push_back(r.n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> CurveSamples::accuracies_at(long n) const {
    std::vector<double> out;
    for (const Record& r : records) {
        if (r.n == n) {
            out.push_back(r.accuracy);
        }
    }
    return out;
}

double CurveSamples::mean_accuracy_at(long n) const {
    const auto accs = accuracies_at(n);
    if (accs.empty()) {
        throw InputError("no samples for size " + std::to_string(n));
    }
    double sum = 0.0;
    for (double a : accs) {
        sum += a;
    }
    return sum / static_cast<double>(accs.size());
}

double CurveModel::predict(double n) const {
    return std::clamp(a - b * std::pow(n, -c), 0.0, 1.0);
}

namespace {

struct FitPoint {
    double x = 0.0;  // n
    double y = 0.0;  // mean accuracy
};

// Closed-form least squares for (a, b) at fixed c; returns RMSE.
double solve_ab(const std::vector<FitPoint>& pts, double c, double& a, double& b) {
    // Basis: y ~ a - b * u with u = n^-c.
    double su = 0.0, suu = 0.0, sy = 0.0, suy = 0.0;
    const double n = static_cast<double>(pts.size());
    for (const FitPoint& p : pts) {
        const double u = std::pow(p.x, -c);
        su += u;
        suu += u * u;
        sy += p.y;
        suy += u * p.y;
    }
    const double det = n * suu - su * su;
    if (std::abs(det) < 1e-15) {
        a = sy / n;
        b = 0.0;
    } else {
        b = -(n * suy - su * sy) / det;
        a = (sy + b * su) / n;
    }
    double sse = 0.0;
    for (const FitPoint& p : pts) {
        const double r = p.y - (a - b * std::pow(p.x, -c));
        sse += r * r;
    }
    return std::sqrt(sse / n);
}

}  // namespace

CurveModel fit_power_law(const CurveSamples& samples) {
    const std::vector<long> ns = samples.sizes();
    if (ns.size() < 3) {
        throw InputError("fit_power_law requires at least 3 distinct sizes");
    }
    std::vector<FitPoint> pts;
    for (long n : ns) {
        pts.push_back({static_cast<double>(n), samples.mean_accuracy_at(n)});
    }

    // Golden-section search on c.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = kCLow, hi = kCHigh;
    double a = 0.0, b = 0.0;
    auto rmse_at = [&pts](double c) {
        double aa, bb;
        return solve_ab(pts, c, aa, bb);
    };
    double c1 = hi - phi * (hi - lo);
    double c2 = lo + phi * (hi - lo);
    double f1 = rmse_at(c1);
    double f2 = rmse_at(c2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = c2;
            c2 = c1;
            f2 = f1;
            c1 = hi - phi * (hi - lo);
            f1 = rmse_at(c1);
        } else {
            lo = c1;
            c1 = c2;
            f1 = f2;
            c2 = lo + phi * (hi - lo);
            f2 = rmse_at(c2);
        }
    }
    CurveModel model;
    model.c = 0.5 * (lo + hi);
    model.fit_rmse = solve_ab(pts, model.c, a, b);

    if (a > 1.0) {
        // Re-solve b with the asymptote pinned to 1.
        a = 1.0;
        double sxx = 0.0, sxy = 0.0;
        for (const FitPoint& p : pts) {
            const double u = std::pow(p.x, -model.c);
            sxx += u * u;
            sxy += u * (a - p.y);
        }
        b = sxx > 0.0 ? sxy / sxx : 0.0;
    }
    if (b < kMinB) {
        model.degenerate = true;
        b = kMinB;
        double sy = 0.0;
        for (const FitPoint& p : pts) {
            sy += p.y;
        }
        a = std::min(sy / static_cast<double>(pts.size()), 1.0);
    }
    model.a = std::max(a, 1e-9);
    model.b = b;
    model.n_fit_max = ns.back();
    {
        double sse = 0.0;
        for (const FitPoint& p : pts) {
            const double r = p.y - (model.a - model.b * std::pow(p.x, -model.c));
            sse += r * r;
        }
        model.fit_rmse = std::sqrt(sse / static_cast<double>(pts.size()));
    }
    return model;
}

namespace {

void check_sizes(const std::vector<long>& sizes) {
    if (sizes.empty()) {
        throw InputError("build_setting requires at least one size");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) {
            throw InputError("sizes must be strictly ascending");
        }
    }
}

}  // namespace

DelegationSetting build_setting(const CurveModel& model, int m, const std::vector<long>& sizes,
                                double cost_per_sample) {
    check_sizes(sizes);
    std::vector<ActionSpec> actions;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double acc = model.predict(static_cast<double>(sizes[i]));
        const double p = std::clamp(acc, 0.001, 0.999);
        actions.emplace_back(static_cast<int>(i + 1), sizes[i],
                             cost_per_sample * static_cast<double>(sizes[i]), binomial_pmf(m, p),
                             acc);
    }
    return DelegationSetting(m, std::move(actions));
}

DelegationSetting build_setting(const CurveSamples& samples, int m, const std::vector<long>& sizes,
                                double cost_per_sample) {
    check_sizes(sizes);
    std::vector<ActionSpec> actions;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::vector<double> accs = samples.accuracies_at(sizes[i]);
        if (accs.empty()) {
            throw InputError("no samples for requested size " + std::to_string(sizes[i]));
        }
        actions.emplace_back(static_cast<int>(i + 1), sizes[i],
                             cost_per_sample * static_cast<double>(sizes[i]),
                             binomial_mixture(m, accs),
                             std::clamp(samples.mean_accuracy_at(sizes[i]), 0.0, 1.0));
    }
    return DelegationSetting(m, std::move(actions));
}

PilotSample sample_pilot(const CurveSamples& samples, long k, int r, std::uint64_t seed) {
    if (r < 1) {
        throw InputError("repetitions per size must be at least 1");
    }
    const std::vector<long> all_sizes = samples.sizes();
    if (all_sizes.empty()) {
        throw InputError("sample_pilot requires nonempty samples");
    }
    std::vector<long> kept;
    long used = 0;
    for (long n : all_sizes) {
        if (used + static_cast<long>(r) * n > k) {
            break;
        }
        used += static_cast<long>(r) * n;
        kept.push_back(n);
    }
    if (kept.empty()) {
        throw InputError("pilot budget cannot cover the smallest size");
    }

    std::mt19937_64 rng(seed);
    PilotSample pilot;
    pilot.n0 = kept.back();
    for (long n : kept) {
        std::vector<double> accs = samples.accuracies_at(n);
        if (accs.size() <= static_cast<std::size_t>(r)) {
            if (accs.size() < static_cast<std::size_t>(r)) {
                pilot.short_on_reps = true;
            }
            for (double a : accs) {
                pilot.samples.add(n, a);
            }
            continue;
        }
        // Seeded sample of r repetitions without replacement.
        for (int taken = 0; taken < r; ++taken) {
            std::uniform_int_distribution<std::size_t> pick(0, accs.size() - 1);
            const std::size_t idx = pick(rng);
            pilot.samples.add(n, accs[idx]);
            accs.erase(accs.begin() + static_cast<std::ptrdiff_t>(idx));
        }
    }
    return pilot;
}

double sample_size_multiplier(const DelegationSetting& setting_est,
                              const DelegationSetting& setting_true, double budget, long k) {
    if (k <= 0) {
        throw InputError("pilot size k must be positive");
    }
    const SolveReport designed = budget_optimal(setting_est, budget);
    const BestResponse response = best_response(setting_true, designed.contract);
    const long incentivized = setting_true.action(response.action_id).n_samples;
    return static_cast<double>(incentivized) / static_cast<double>(k);
}

std::vector<SweepPoint> estimation_error_sweep(const CurveModel& true_model,
                                               const std::vector<CurveModel>& est_models, int m,
                                               const std::vector<long>& sizes, double budget) {
    const DelegationSetting setting_true = build_setting(true_model, m, sizes, 1.0);
    const SolveReport perfect = budget_optimal(setting_true, budget);
    const ActionSpec& target = setting_true.action(perfect.target_action);
    const double best_accuracy = target.accuracy();
    const auto target_n = static_cast<double>(target.n_samples);

    std::vector<SweepPoint> out;
    out.reserve(est_models.size());
    for (const CurveModel& est : est_models) {
        const DelegationSetting setting_est = build_setting(est, m, sizes, 1.0);
        const SolveReport designed = budget_optimal(setting_est, budget);
        const BestResponse response = best_response(setting_true, designed.contract);
        SweepPoint point;
        point.signed_error = est.predict(target_n) - true_model.predict(target_n);
        point.accuracy_loss = best_accuracy - setting_true.action(response.action_id).accuracy();
        out.push_back(point);
    }
    return out;
}

}  // namespace delcon
