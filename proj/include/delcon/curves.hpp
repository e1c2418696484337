#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "delcon/core.hpp"

namespace delcon {

/// Accuracy measurements per training-set size; repeats allowed.
struct CurveSamples {
    struct Record {
        long n = 0;
        double accuracy = 0.0;
    };
    std::vector<Record> records;

    void add(long n, double accuracy);
    /// Distinct sizes in ascending order.
    std::vector<long> sizes() const;
    std::vector<double> accuracies_at(long n) const;
    double mean_accuracy_at(long n) const;
};

/// Power law E[acc_n] = a - b * n^(-c) with fit diagnostics.
struct CurveModel {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double fit_rmse = 0.0;
    long n_fit_max = 0;
    bool degenerate = false;  // b pinned at its lower bound (flat data)

    /// Model prediction clamped to [0,1].
    double predict(double n) const;
};

/// Least-squares power-law fit: golden-section search over c with a
/// closed-form linear solve for (a, b) at each candidate.
CurveModel fit_power_law(const CurveSamples& samples);

/// Setting from a fitted model: pure binomial outcome per size, costs
/// cost_per_sample * n, model means clamped into [0.001, 0.999].
DelegationSetting build_setting(const CurveModel& model, int m, const std::vector<long>& sizes,
                                double cost_per_sample);

/// Setting from raw samples: bootstrap binomial mixture per size.
DelegationSetting build_setting(const CurveSamples& samples, int m, const std::vector<long>& sizes,
                                double cost_per_sample);

struct PilotSample {
    CurveSamples samples;
    long n0 = 0;               // largest kept size
    bool short_on_reps = false;  // some kept size had fewer than r repetitions
};

/// Maximal prefix of sizes with sum(r*n) <= k; keeps r seeded-random
/// repetitions per kept size.
PilotSample sample_pilot(const CurveSamples& samples, long k, int r, std::uint64_t seed);

/// Incentivized training size under the estimated-setting contract, evaluated
/// against the true setting, divided by the pilot budget k.
double sample_size_multiplier(const DelegationSetting& setting_est,
                              const DelegationSetting& setting_true, double budget, long k);

struct SweepPoint {
    double signed_error = 0.0;   // estimated minus true accuracy at the target n
    double accuracy_loss = 0.0;  // vs. the perfect-information contract
};

/// For each estimated model: design under the estimate, evaluate the agent's
/// best response under the truth.
std::vector<SweepPoint> estimation_error_sweep(const CurveModel& true_model,
                                               const std::vector<CurveModel>& est_models, int m,
                                               const std::vector<long>& sizes, double budget);

}  // namespace delcon
