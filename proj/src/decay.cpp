#include "ropebound/decay.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace ropebound {

namespace {

// Dense B-value scan over [m_lo, m_hi] feeding visit(m, B_m); stops early
// when visit returns false. Uses the Chebyshev recurrence
//   cos((m+1) t) = 2 cos(t) cos(m t) - cos((m-1) t)
// per frequency, resynchronized against direct evaluation every 4096 steps
// to keep the drift below 1e-8 of the direct path.
template <typename Visit>
void scan_b_values(const ThetaSchedule& sched, std::int64_t m_lo, std::int64_t m_hi,
                   Visit&& visit) {
    constexpr std::int64_t kResyncInterval = 4096;
    const std::vector<double>& thetas = sched.thetas;
    const std::size_t n = thetas.size();

    std::vector<double> two_cos(n), c_prev(n), c_curr(n);
    for (std::size_t i = 0; i < n; ++i) two_cos[i] = 2.0 * std::cos(thetas[i]);

    std::int64_t m = m_lo;
    while (m <= m_hi) {
        const std::int64_t block_hi = std::min(m_hi, m + kResyncInterval - 1);
        for (std::size_t i = 0; i < n; ++i) {
            c_prev[i] = std::cos(static_cast<double>(m - 1) * thetas[i]);
            c_curr[i] = std::cos(static_cast<double>(m) * thetas[i]);
        }
        for (std::int64_t j = m;; ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) sum += c_curr[i];
            if (!visit(j, sum)) return;
            if (j == block_hi) break;
            for (std::size_t i = 0; i < n; ++i) {
                const double next = two_cos[i] * c_curr[i] - c_prev[i];
                c_prev[i] = c_curr[i];
                c_curr[i] = next;
            }
        }
        m = block_hi + 1;
    }
}

void check_range(std::int64_t m_lo, std::int64_t m_hi) {
    if (m_lo < 1 || m_hi < m_lo) {
        throw std::invalid_argument("bad scan range [" + std::to_string(m_lo) + ", " +
                                    std::to_string(m_hi) + "]");
    }
}

}  // namespace

double b_value(const ThetaSchedule& sched, std::int64_t m) {
    const double mf = static_cast<double>(m);
    double acc = 0.0;
    for (double theta : sched.thetas) acc += std::cos(mf * theta);
    return acc;
}

double weighted_b_value(const ThetaSchedule& sched, std::span<const double> sigmas,
                        std::int64_t m) {
    if (sigmas.size() != static_cast<std::size_t>(sched.d)) {
        throw std::invalid_argument("sigmas length must equal the head dimension");
    }
    for (double s : sigmas) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("standard deviations must be nonnegative and finite");
        }
    }
    const double mf = static_cast<double>(m);
    double acc = 0.0;
    for (int i = 0; i < sched.num_freqs(); ++i) {
        const std::size_t j = 2 * static_cast<std::size_t>(i);
        const double weight = sigmas[j] * sigmas[j] + sigmas[j + 1] * sigmas[j + 1];
        acc += weight * std::cos(mf * sched.thetas[static_cast<std::size_t>(i)]);
    }
    return acc;
}

double upper_bound_factor(const ThetaSchedule& sched, std::int64_t m) {
    const double mf = static_cast<double>(m);
    std::complex<double> partial = 0.0;
    double total = 0.0;
    for (double theta : sched.thetas) {
        const double angle = mf * theta;
        partial += std::complex<double>(std::cos(angle), std::sin(angle));
        total += std::abs(partial);
    }
    return total;
}

std::optional<std::int64_t> first_violation(const ThetaSchedule& sched, std::int64_t m_lo,
                                            std::int64_t m_hi) {
    check_range(m_lo, m_hi);
    std::optional<std::int64_t> found;
    scan_b_values(sched, m_lo, m_hi, [&](std::int64_t m, double b) {
        if (b < 0.0) {
            found = m;
            return false;
        }
        return true;
    });
    return found;
}

std::int64_t violation_count(const ThetaSchedule& sched, std::int64_t m_lo, std::int64_t m_hi) {
    check_range(m_lo, m_hi);
    // reference path: direct evaluation, no recurrence
    std::int64_t count = 0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        if (b_value(sched, m) < 0.0) ++count;
    }
    return count;
}

CurveSamples sample_curve(const ThetaSchedule& sched, CurveMetric metric, std::int64_t m_max,
                          std::int64_t stride, std::span<const double> sigmas) {
    if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    CurveSamples curve;
    curve.metric = metric;
    for (std::int64_t m = 0; m <= m_max; m += stride) {
        double value = 0.0;
        switch (metric) {
            case CurveMetric::BValue:
                value = b_value(sched, m);
                break;
            case CurveMetric::WeightedBValue:
                value = weighted_b_value(sched, sigmas, m);
                break;
            case CurveMetric::UpperBound:
                value = upper_bound_factor(sched, m);
                break;
        }
        curve.points.emplace_back(m, value);
    }
    return curve;
}

}  // namespace ropebound
