#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ropebound/ood.hpp"
#include "ropebound/schedule.hpp"

using namespace ropebound;

TEST_CASE("same-base extension exposes the low-frequency tail") {
    const auto sched = make_standard(1e4, 128);
    const auto report = ood_report(sched, 4096, sched, 32768);
    CHECK(report.any_ood);

    const auto& last = report.per_dim.back();
    CHECK(last.dim == 63);
    CHECK(last.trained_max_angle == doctest::Approx(0.47299870092880207).epsilon(1e-13));
    CHECK(last.extended_max_angle == doctest::Approx(3.7839896074304166).epsilon(1e-13));
    CHECK_FALSE(last.full_period_covered);
    CHECK(last.ood);

    // dim 0 rotates by 1 rad per step: 4096 rad >> 2 pi
    CHECK(report.per_dim[0].full_period_covered);
    CHECK_FALSE(report.per_dim[0].ood);
}

TEST_CASE("a small base covers every period during training") {
    const auto sched = make_standard(500.0, 128);
    // slowest dimension still sweeps 9.03 rad > 2 pi over 4096 positions
    const auto report = ood_report(sched, 4096, sched, 1 << 20);
    CHECK_FALSE(report.any_ood);
    CHECK(report.per_dim.back().trained_max_angle ==
          doctest::Approx(9.0273722226498123).epsilon(1e-13));
    for (const auto& dim : report.per_dim) {
        CHECK(dim.full_period_covered);
    }
}

TEST_CASE("ntk-scaled extension keeps the slowest dimension in distribution") {
    const auto trained = make_standard(1e4, 128);
    const auto extended = make_ntk_scaled(1e4, 8.0, 128);
    const auto report = ood_report(trained, 4096, extended, 32768);
    const auto& last = report.per_dim.back();
    // the scaled base is chosen so the slowest extended angle equals the trained one
    CHECK(last.extended_max_angle <=
          last.trained_max_angle * (1.0 + 1e-9));
    CHECK_FALSE(last.ood);
}

TEST_CASE("identity extension is never out of distribution") {
    for (double base : {500.0, 1e4, 5e6}) {
        const auto sched = make_standard(base, 128);
        const auto report = ood_report(sched, 4096, sched, 4096);
        CHECK_FALSE(report.any_ood);
    }
}

TEST_CASE("extending further never clears an ood flag") {
    const auto sched = make_standard(1e4, 128);
    const auto shorter = ood_report(sched, 4096, sched, 16384);
    const auto longer = ood_report(sched, 4096, sched, 65536);
    REQUIRE(shorter.per_dim.size() == longer.per_dim.size());
    for (std::size_t i = 0; i < shorter.per_dim.size(); ++i) {
        if (shorter.per_dim[i].ood) CHECK(longer.per_dim[i].ood);
    }
}

TEST_CASE("ood dimensions form a suffix for standard schedules") {
    const auto sched = make_standard(1e4, 128);
    const auto report = ood_report(sched, 4096, sched, 32768);
    bool seen_ood = false;
    for (const auto& dim : report.per_dim) {
        if (dim.ood) {
            seen_ood = true;
        } else {
            CHECK_FALSE(seen_ood);  // no clear flag after the suffix starts
        }
    }
    CHECK(seen_ood);
}

TEST_CASE("full-period threshold sits exactly at 2 pi") {
    // power-of-two scaling keeps 64 * (2 pi / 64) bit-exact, so the trained
    // angle lands exactly on 2 pi and counts as covered
    const auto sched = make_custom({2.0 * std::numbers::pi / 64.0});
    const auto report = ood_report(sched, 64, sched, 100000);
    CHECK(report.per_dim[0].full_period_covered);
    CHECK_FALSE(report.per_dim[0].ood);

    // one position short of the full period is not covered
    const auto shy = ood_report(sched, 63, sched, 100000);
    CHECK_FALSE(shy.per_dim[0].full_period_covered);
    CHECK(shy.per_dim[0].ood);
}

TEST_CASE("ood report input validation") {
    const auto a = make_standard(1e4, 128);
    const auto b = make_standard(1e4, 64);
    CHECK_THROWS_AS(ood_report(a, 4096, b, 8192), std::invalid_argument);
    CHECK_THROWS_AS(ood_report(a, 0, a, 8192), std::invalid_argument);
    CHECK_THROWS_AS(ood_report(a, 4096, a, 0), std::invalid_argument);
}
