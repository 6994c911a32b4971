#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ropebound/schedule.hpp"

namespace ropebound {

enum class CurveMetric { BValue, WeightedBValue, UpperBound };

// A sampled decay curve m -> value, m strictly increasing.
struct CurveSamples {
    CurveMetric metric = CurveMetric::BValue;
    std::vector<std::pair<std::int64_t, double>> points;
};

// Discrimination value B_{m,theta} = sum_i cos(m * theta_i): the expected
// attention advantage of a similar key over a random key at relative
// distance m, scaled by 1/(2 sigma^2). Bounded by d/2 in magnitude.
double b_value(const ThetaSchedule& sched, std::int64_t m);

// Unequal-variance form: sum_i (sigma_{2i}^2 + sigma_{2i+1}^2) cos(m theta_i).
// With all sigmas equal to s this reduces to 2 s^2 * b_value.
double weighted_b_value(const ThetaSchedule& sched, std::span<const double> sigmas,
                        std::int64_t m);

// Schedule-dependent factor of the attention-score upper bound:
// sum_{n=1}^{d/2} |sum_{l<n} exp(sqrt(-1) * m * theta_l)|.
// Maximal at m = 0 where it equals (d/2)(d/2+1)/2.
double upper_bound_factor(const ThetaSchedule& sched, std::int64_t m);

// Smallest m in [m_lo, m_hi] with B_{m,theta} < 0, scanning densely over
// integer m (a violation can be a single integer wide, so no striding).
std::optional<std::int64_t> first_violation(const ThetaSchedule& sched, std::int64_t m_lo,
                                            std::int64_t m_hi);

// Count of m in [m_lo, m_hi] with B_{m,theta} < 0. B == 0 is not a violation.
std::int64_t violation_count(const ThetaSchedule& sched, std::int64_t m_lo, std::int64_t m_hi);

// Points at m = 0, stride, 2*stride, ..., <= m_max, each computed by the
// corresponding point operation. sigmas is consumed by WeightedBValue only.
CurveSamples sample_curve(const ThetaSchedule& sched, CurveMetric metric, std::int64_t m_max,
                          std::int64_t stride, std::span<const double> sigmas = {});

}  // namespace ropebound
