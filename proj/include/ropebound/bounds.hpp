#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ropebound/schedule.hpp"

namespace ropebound {

// No base below base_max satisfies the requested predicate (e.g. d = 2,
// where theta_0 = 1 regardless of base).
class UnattainableError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthResult {
    std::string base_or_schedule;         // recipe spec string
    std::int64_t effective_length = 0;    // largest L with B_m >= 0 for all m <= L
    // Smallest m >= 1 with B_m < 0. Empty means no violation up to the scan
    // limit: the result is censored at m_limit, not a claim about larger m.
    std::optional<std::int64_t> first_violation_m;
};

struct BoundResult {
    std::int64_t target_length = 0;
    int d = 0;
    double base = 0.0;        // solved lower bound for the base value
    double bracket_lo = 0.0;  // predicate false here (except the degenerate base-1 case)
    double bracket_hi = 0.0;  // predicate true here; base == bracket_hi
    bool verified = false;    // full re-scan of [1, target_length] at `base` passed
    // Sign pattern of 8 log-spaced probes inside the final bracket. Bisection
    // assumes the predicate is monotone in base; a false here flags that the
    // assumption broke inside the bracket.
    bool bracket_probe_monotone = true;
};

// Largest L <= m_limit such that B_{m,theta} >= 0 for every integer m <= L.
LengthResult effective_length(const ThetaSchedule& sched, std::int64_t m_limit);

// Smallest base (to tol_rel relative bracket width) whose standard schedule
// keeps B_{m,theta} >= 0 over m in [1, target_length]. The feasible set is a
// union of islands in base, so the search sweeps a fine geometric grid
// upward from base = 1 and then bisects the edge of the first feasible
// island; the returned base is re-verified by a full scan.
BoundResult lower_bound_base(std::int64_t target_length, int d, double tol_rel = 1e-3,
                             double base_max = 1e12);

struct Table2Row {
    std::int64_t context_length;
    double base_lower_bound;
};

// Base lower bounds for context lengths {1k, 2k, 4k, ..., 512k, 1M} where
// "k" multiplies by k_unit (1024 or 1000) and "1M" is k_unit^2. Rows are
// solved concurrently; output order is fixed.
std::vector<Table2Row> table2(int d = 128, int k_unit = 1024, double tol_rel = 1e-3);

}  // namespace ropebound
