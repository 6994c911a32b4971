#include "ropebound/ood.hpp"

#include <numbers>
#include <stdexcept>

namespace ropebound {

OodReport ood_report(const ThetaSchedule& train_sched, std::int64_t t_train,
                     const ThetaSchedule& new_sched, std::int64_t t_new) {
    if (train_sched.d != new_sched.d) {
        throw std::invalid_argument("schedules must share the head dimension");
    }
    if (t_train < 1 || t_new < 1) {
        throw std::invalid_argument("context lengths must be >= 1");
    }

    constexpr double kFullPeriod = 2.0 * std::numbers::pi;
    // angles that agree algebraically can differ by rounding; a hair past the
    // trained range is not out-of-distribution
    constexpr double kRelSlack = 1e-12;

    OodReport report;
    report.per_dim.reserve(train_sched.thetas.size());
    for (int i = 0; i < train_sched.num_freqs(); ++i) {
        OodDimension dim;
        dim.dim = i;
        dim.trained_max_angle =
            static_cast<double>(t_train) * train_sched.thetas[static_cast<std::size_t>(i)];
        dim.extended_max_angle =
            static_cast<double>(t_new) * new_sched.thetas[static_cast<std::size_t>(i)];
        dim.full_period_covered = dim.trained_max_angle >= kFullPeriod;
        dim.ood = !dim.full_period_covered &&
                  dim.extended_max_angle > dim.trained_max_angle * (1.0 + kRelSlack);
        report.any_ood = report.any_ood || dim.ood;
        report.per_dim.push_back(dim);
    }
    return report;
}

}  // namespace ropebound
