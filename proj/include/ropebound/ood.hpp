#pragma once

#include <cstdint>
#include <vector>

#include "ropebound/schedule.hpp"

namespace ropebound {

struct OodDimension {
    int dim = 0;
    double trained_max_angle = 0.0;   // t_train * train_theta_i, radians
    double extended_max_angle = 0.0;  // t_new * new_theta_i, radians
    bool full_period_covered = false; // trained_max_angle >= 2*pi (ties covered)
    bool ood = false;                 // not covered and extended beyond trained
};

struct OodReport {
    std::vector<OodDimension> per_dim;
    bool any_ood = false;
};

// Per-dimension rotation-angle coverage check: a dimension is
// out-of-distribution when its trained angle range never covered a full
// cosine period and the extension pushes beyond the trained range.
OodReport ood_report(const ThetaSchedule& train_sched, std::int64_t t_train,
                     const ThetaSchedule& new_sched, std::int64_t t_new);

}  // namespace ropebound
