#include "ropebound/mc.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ropebound/decay.hpp"
#include "ropebound/rng.hpp"
#include "ropebound/rope.hpp"

namespace ropebound {

namespace {

constexpr std::int64_t kChunkSize = 8192;

void check_config(const McConfig& cfg) {
    if (cfg.n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (!(cfg.sigma > 0.0) || !std::isfinite(cfg.sigma)) {
        throw std::invalid_argument("sigma must be positive and finite");
    }
    if (!(cfg.eps_scale >= 0.0) || !std::isfinite(cfg.eps_scale)) {
        throw std::invalid_argument("eps_scale must be nonnegative and finite");
    }
    if (!std::isfinite(cfg.mu)) throw std::invalid_argument("mu must be finite");
}

double draw_component(RandomStream& rng, ComponentDist dist, double mean, double sd) {
    if (sd == 0.0) return mean;
    if (dist == ComponentDist::Uniform) {
        // uniform with the requested mean and standard deviation
        return mean + sd * std::numbers::sqrt3_v<double> * (2.0 * rng.next_unit() - 1.0);
    }
    return mean + sd * rng.next_gaussian();
}

// Runs fn over fixed-size trial chunks, any number of workers. Partials are
// stored by chunk index and combined by the caller in index order, so the
// result does not depend on scheduling.
template <typename Partial, typename ChunkFn>
std::vector<Partial> run_chunked(std::int64_t n_items, ChunkFn&& fn) {
    const std::int64_t n_chunks = (n_items + kChunkSize - 1) / kChunkSize;
    std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
    std::atomic<std::int64_t> next_chunk{0};

    auto worker = [&] {
        for (;;) {
            const std::int64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= n_chunks) return;
            const std::int64_t begin = chunk * kChunkSize;
            const std::int64_t end = std::min(n_items, begin + kChunkSize);
            partials[static_cast<std::size_t>(chunk)] = fn(begin, end);
        }
    };

    std::int64_t n_workers = std::thread::hardware_concurrency();
    n_workers = std::max<std::int64_t>(1, std::min(n_workers, n_chunks));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers - 1));
    for (std::int64_t w = 1; w < n_workers; ++w) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
    return partials;
}

struct MomentPartial {
    double sum = 0.0;
    double sum_sq = 0.0;
};

McReport estimate_impl(const ThetaSchedule& sched, std::int64_t m,
                       std::span<const double> component_sds, double theory,
                       const McConfig& cfg) {
    const std::size_t d = static_cast<std::size_t>(sched.d);

    auto chunk_fn = [&](std::int64_t begin, std::int64_t end) {
        MomentPartial acc;
        HeadVector q(d), k(d), k_similar(d);
        for (std::int64_t trial = begin; trial < end; ++trial) {
            RandomStream rng(cfg.seed, static_cast<std::uint64_t>(trial));
            for (std::size_t j = 0; j < d; ++j) {
                q[j] = draw_component(rng, cfg.dist, cfg.mu, component_sds[j]);
            }
            for (std::size_t j = 0; j < d; ++j) {
                k[j] = draw_component(rng, cfg.dist, cfg.mu, component_sds[j]);
            }
            if (cfg.eps_scale > 0.0) {
                for (std::size_t j = 0; j < d; ++j) {
                    k_similar[j] = q[j] + cfg.eps_scale * rng.next_gaussian();
                }
            } else {
                k_similar = q;
            }
            const double diff =
                attention_score(q, k_similar, m, sched) - attention_score(q, k, m, sched);
            acc.sum += diff;
            acc.sum_sq += diff * diff;
        }
        return acc;
    };

    const auto partials = run_chunked<MomentPartial>(cfg.n_samples, chunk_fn);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const MomentPartial& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }

    const double n = static_cast<double>(cfg.n_samples);
    McReport report;
    report.theory = theory;
    report.gap_hat = sum / n;
    if (cfg.n_samples >= 2) {
        const double variance =
            std::max(0.0, (sum_sq - n * report.gap_hat * report.gap_hat) / (n - 1.0));
        report.standard_error = std::sqrt(variance / n);
    }
    if (report.standard_error > 0.0) {
        report.z = (report.gap_hat - theory) / report.standard_error;
    } else {
        report.z = (report.gap_hat == theory)
                       ? 0.0
                       : std::copysign(std::numeric_limits<double>::infinity(),
                                       report.gap_hat - theory);
    }
    return report;
}

}  // namespace

McReport estimate_gap(const ThetaSchedule& sched, std::int64_t m, const McConfig& cfg) {
    check_config(cfg);
    const std::vector<double> sds(static_cast<std::size_t>(sched.d), cfg.sigma);
    const double theory = 2.0 * cfg.sigma * cfg.sigma * b_value(sched, m);
    return estimate_impl(sched, m, sds, theory, cfg);
}

McReport estimate_gap_hetero(const ThetaSchedule& sched, std::int64_t m,
                             std::span<const double> sigmas, const McConfig& cfg) {
    check_config(cfg);
    const double theory = weighted_b_value(sched, sigmas, m);  // also validates sigmas
    return estimate_impl(sched, m, sigmas, theory, cfg);
}

double argmax_win_rate(const ThetaSchedule& sched, std::int64_t m, std::int64_t context_size,
                       const McConfig& cfg, bool null_similar) {
    check_config(cfg);
    if (context_size < 1) throw std::invalid_argument("context_size must be >= 1");
    const std::size_t d = static_cast<std::size_t>(sched.d);

    auto chunk_fn = [&](std::int64_t begin, std::int64_t end) {
        std::int64_t wins = 0;
        HeadVector q(d), key(d), similar(d);
        for (std::int64_t trial = begin; trial < end; ++trial) {
            RandomStream rng(cfg.seed, static_cast<std::uint64_t>(trial));
            for (std::size_t j = 0; j < d; ++j) {
                q[j] = draw_component(rng, cfg.dist, cfg.mu, cfg.sigma);
            }
            if (null_similar) {
                for (std::size_t j = 0; j < d; ++j) {
                    similar[j] = draw_component(rng, cfg.dist, cfg.mu, cfg.sigma);
                }
            } else if (cfg.eps_scale > 0.0) {
                for (std::size_t j = 0; j < d; ++j) {
                    similar[j] = q[j] + cfg.eps_scale * rng.next_gaussian();
                }
            } else {
                similar = q;
            }
            const double similar_score = attention_score(q, similar, m, sched);
            bool won = true;
            for (std::int64_t c = 0; c < context_size; ++c) {
                for (std::size_t j = 0; j < d; ++j) {
                    key[j] = draw_component(rng, cfg.dist, cfg.mu, cfg.sigma);
                }
                if (attention_score(q, key, m, sched) >= similar_score) {
                    won = false;
                    break;
                }
            }
            if (won) ++wins;
        }
        return wins;
    };

    const auto partials = run_chunked<std::int64_t>(cfg.n_samples, chunk_fn);
    std::int64_t wins = 0;
    for (std::int64_t w : partials) wins += w;
    return static_cast<double>(wins) / static_cast<double>(cfg.n_samples);
}

}  // namespace ropebound
