#include "ropebound/rope.hpp"

#include <cmath>
#include <stdexcept>

namespace ropebound {

namespace {

void check_length(std::size_t got, int d) {
    if (got != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("vector length " + std::to_string(got) +
                                    " does not match head dimension " + std::to_string(d));
    }
}

}  // namespace

HeadVector rotate(std::span<const double> x, std::int64_t m, const ThetaSchedule& sched) {
    check_length(x.size(), sched.d);
    HeadVector out(x.size());
    const double mf = static_cast<double>(m);
    for (int i = 0; i < sched.num_freqs(); ++i) {
        const double angle = mf * sched.thetas[static_cast<std::size_t>(i)];
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const std::size_t j = 2 * static_cast<std::size_t>(i);
        out[j] = c * x[j] - s * x[j + 1];
        out[j + 1] = s * x[j] + c * x[j + 1];
    }
    return out;
}

double attention_score(std::span<const double> q, std::span<const double> k, std::int64_t m,
                       const ThetaSchedule& sched) {
    check_length(q.size(), sched.d);
    check_length(k.size(), sched.d);
    double acc = 0.0;
    const double mf = static_cast<double>(m);
    for (int i = 0; i < sched.num_freqs(); ++i) {
        const double angle = mf * sched.thetas[static_cast<std::size_t>(i)];
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const std::size_t j = 2 * static_cast<std::size_t>(i);
        acc += q[j] * (c * k[j] - s * k[j + 1]) + q[j + 1] * (s * k[j] + c * k[j + 1]);
    }
    return acc;
}

}  // namespace ropebound
