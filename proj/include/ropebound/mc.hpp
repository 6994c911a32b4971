#pragma once

#include <cstdint>
#include <span>

#include "ropebound/schedule.hpp"

namespace ropebound {

// Component distribution of the sampled query/key vectors. The gap theory
// only needs i.i.d. components with the stated mean and standard deviation.
enum class ComponentDist { Gaussian, Uniform };

struct McConfig {
    std::int64_t n_samples = 100000;
    double sigma = 1.0;      // component standard deviation of q and k
    double mu = 0.0;         // component mean
    double eps_scale = 0.1;  // std of the similar-key perturbation, mean 0
    std::uint64_t seed = 0;
    ComponentDist dist = ComponentDist::Gaussian;
};

struct McReport {
    double gap_hat = 0.0;         // empirical E[q^T R_m k*] - E[q^T R_m k]
    double standard_error = 0.0;  // of gap_hat, from the paired per-sample differences
    double theory = 0.0;          // 2 sigma^2 * B_{m,theta} (or the weighted form)
    double z = 0.0;               // (gap_hat - theory) / standard_error
};

// Monte Carlo estimate of the similar-vs-random attention gap at relative
// distance m, against the closed-form value. Fully deterministic given the
// seed, independent of worker count.
McReport estimate_gap(const ThetaSchedule& sched, std::int64_t m, const McConfig& cfg);

// Per-component standard deviations (length d); theory becomes
// weighted_b_value(sched, sigmas, m).
McReport estimate_gap_hetero(const ThetaSchedule& sched, std::int64_t m,
                             std::span<const double> sigmas, const McConfig& cfg);

// Fraction of trials in which a similar key k* = q + eps placed among
// context_size random keys (all at relative distance m) attains the maximum
// attention score. With null_similar the similar key is replaced by an
// independent random key, giving the exchangeable 1/(context_size+1) null.
double argmax_win_rate(const ThetaSchedule& sched, std::int64_t m, std::int64_t context_size,
                       const McConfig& cfg, bool null_similar = false);

}  // namespace ropebound
