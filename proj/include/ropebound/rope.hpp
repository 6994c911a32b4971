#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ropebound/schedule.hpp"

namespace ropebound {

// Query or key vector of one attention head; length equals the schedule's d.
using HeadVector = std::vector<double>;

// Apply the block-diagonal rotation R_{m,theta}: each pair (x[2i], x[2i+1])
// is rotated by angle m * theta_i. Norm-preserving.
HeadVector rotate(std::span<const double> x, std::int64_t m, const ThetaSchedule& sched);

// Attention score q^T R_{m,theta} k at relative distance m. Equals the dot
// product of rotate(q, i) and rotate(k, i + m) for any absolute offset i.
double attention_score(std::span<const double> q, std::span<const double> k, std::int64_t m,
                       const ThetaSchedule& sched);

}  // namespace ropebound
