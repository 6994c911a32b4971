#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "ropebound/schedule.hpp"

using namespace ropebound;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::filesystem::path write_temp_csv(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("standard schedule values") {
    const auto sched = make_standard(10000.0, 4);
    REQUIRE(sched.d == 4);
    REQUIRE(sched.thetas.size() == 2);
    CHECK(sched.thetas[0] == 1.0);  // base^0
    CHECK(sched.thetas[1] == doctest::Approx(0.01).epsilon(1e-15));

    // 500^(-126/128), high-precision reference
    const auto deep = make_standard(500.0, 128);
    CHECK(rel_diff(deep.thetas[63], 0.0022039482965453643) < 1e-14);

    // theta_0 = 1 for any base
    CHECK(make_standard(7.25, 12).thetas[0] == 1.0);
    CHECK(make_standard(5e8, 128).thetas[0] == 1.0);
}

TEST_CASE("standard schedule is strictly decreasing for base > 1") {
    for (double base : {1.5, 500.0, 1e4, 5e6, 1e9}) {
        const auto sched = make_standard(base, 128);
        for (std::size_t i = 1; i < sched.thetas.size(); ++i) {
            CHECK(sched.thetas[i] < sched.thetas[i - 1]);
            CHECK(sched.thetas[i] > 0.0);
        }
    }
}

TEST_CASE("standard schedule input validation") {
    CHECK_THROWS_AS(make_standard(10000.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_standard(10000.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_standard(10000.0, -4), std::invalid_argument);
    CHECK_THROWS_AS(make_standard(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_standard(-2.0, 4), std::invalid_argument);
}

TEST_CASE("position-interpolated schedule") {
    const auto identity = make_pi_scaled(10000.0, 1.0, 128);
    const auto standard = make_standard(10000.0, 128);
    for (std::size_t i = 0; i < identity.thetas.size(); ++i) {
        CHECK(identity.thetas[i] == standard.thetas[i]);
    }

    const auto scaled = make_pi_scaled(10000.0, 8.0, 4);
    CHECK(scaled.thetas[0] == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(scaled.thetas[1] == doctest::Approx(0.00125).epsilon(1e-15));

    CHECK_THROWS_AS(make_pi_scaled(10000.0, 0.5, 128), std::invalid_argument);
}

TEST_CASE("ntk base scaling") {
    CHECK(ntk_base(10000.0, 1.0, 128) == doctest::Approx(10000.0).epsilon(1e-15));
    CHECK(rel_diff(ntk_base(10000.0, 8.0, 128), 82684.622640562218) < 1e-14);

    // derivation identity: (s T) b_new^(-(d-2)/d) == T b^(-(d-2)/d)
    for (double base : {500.0, 1e4, 1e6}) {
        for (double s : {2.0, 8.0, 64.0}) {
            for (int d : {8, 64, 128}) {
                const double b_new = ntk_base(base, s, d);
                const double exponent = -(static_cast<double>(d) - 2.0) / d;
                const double lhs = s * 4096.0 * std::pow(b_new, exponent);
                const double rhs = 4096.0 * std::pow(base, exponent);
                CHECK(rel_diff(lhs, rhs) < 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(ntk_base(10000.0, 8.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ntk_base(10000.0, 0.5, 128), std::invalid_argument);

    const auto sched = make_ntk_scaled(10000.0, 8.0, 128);
    const auto direct = make_standard(ntk_base(10000.0, 8.0, 128), 128);
    for (std::size_t i = 0; i < sched.thetas.size(); ++i) {
        CHECK(sched.thetas[i] == direct.thetas[i]);
    }
}

TEST_CASE("method 2 piecewise schedule") {
    const auto sched = make_method2();
    REQUIRE(sched.d == 128);
    CHECK(sched.thetas[0] == 1.0);
    CHECK(rel_diff(sched.thetas[63], 1.4434774808618227e-05) < 1e-14);

    // the two branch formulas agree at i = 44
    const double low_branch = std::pow(1e4, -2.0 * 44 / 128.0) / 8.0;
    const double high_branch = std::pow(1e4 * std::pow(8.0, 128.0 / 88.0), -2.0 * 44 / 128.0);
    CHECK(rel_diff(low_branch, high_branch) < 1e-12);
    CHECK(rel_diff(sched.thetas[44], low_branch) < 1e-12);

    CHECK_THROWS_AS(make_method2(64), std::invalid_argument);
}

TEST_CASE("method 1 equals a base-5e6 standard schedule") {
    const auto m1 = make_method1(128);
    const auto standard = make_standard(5e6, 128);
    REQUIRE(m1.thetas.size() == standard.thetas.size());
    for (std::size_t i = 0; i < m1.thetas.size(); ++i) {
        CHECK(m1.thetas[i] == standard.thetas[i]);
    }
    CHECK(m1.thetas[0] == 1.0);

    const auto small = make_method1(4);
    CHECK(rel_diff(small.thetas[1], 4.4721359549995794e-04) < 1e-14);
}

TEST_CASE("custom schedules") {
    const auto single = make_custom({1.0});
    CHECK(single.d == 2);

    const auto pair = make_custom({1.0, 0.01});
    CHECK(pair.d == 4);

    // duplicate frequencies are allowed
    const auto dup = make_custom({0.5, 0.5, 0.5});
    CHECK(dup.d == 6);

    CHECK_THROWS_AS(make_custom({}), std::invalid_argument);
    CHECK_THROWS_AS(make_custom({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_custom({1.0, -0.2}), std::invalid_argument);
    CHECK_THROWS_AS(make_custom({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("schedules rebuild bit-identically from their recipe") {
    const ThetaSchedule samples[] = {
        make_standard(10000.0, 128), make_pi_scaled(10000.0, 4.0, 64),
        make_ntk_scaled(10000.0, 8.0, 128), make_method1(128), make_method2(),
        make_custom({0.25, 1.5, 3.0})};
    for (const auto& sched : samples) {
        const auto again = rebuild(sched);
        REQUIRE(again.d == sched.d);
        for (std::size_t i = 0; i < sched.thetas.size(); ++i) {
            CHECK(again.thetas[i] == sched.thetas[i]);
        }
    }
}

TEST_CASE("custom schedule CSV loading") {
    const auto good = write_temp_csv("ropebound_good.csv", "theta\n1.0\n0.5\n\n0.25\n");
    const auto sched = load_custom_csv(good.string());
    REQUIRE(sched.d == 6);
    CHECK(sched.thetas[0] == 1.0);
    CHECK(sched.thetas[1] == 0.5);
    CHECK(sched.thetas[2] == 0.25);

    const auto bad_header = write_temp_csv("ropebound_badheader.csv", "freq\n1.0\n");
    CHECK_THROWS(load_custom_csv(bad_header.string()));

    const auto bad_value = write_temp_csv("ropebound_badvalue.csv", "theta\nabc\n");
    CHECK_THROWS(load_custom_csv(bad_value.string()));

    const auto empty = write_temp_csv("ropebound_empty.csv", "theta\n");
    CHECK_THROWS(load_custom_csv(empty.string()));

    CHECK_THROWS(load_custom_csv("/nonexistent/ropebound.csv"));
}

TEST_CASE("schedule spec parsing") {
    const auto standard = parse_schedule_spec("std:10000", 128);
    CHECK(std::holds_alternative<StandardRecipe>(standard.recipe));
    CHECK(standard.thetas == make_standard(10000.0, 128).thetas);

    const auto pi = parse_schedule_spec("pi:10000:8", 64);
    CHECK(pi.thetas == make_pi_scaled(10000.0, 8.0, 64).thetas);

    const auto ntk = parse_schedule_spec("ntk:10000:8", 128);
    CHECK(ntk.thetas == make_ntk_scaled(10000.0, 8.0, 128).thetas);

    CHECK(parse_schedule_spec("method1", 128).thetas == make_method1(128).thetas);
    CHECK(parse_schedule_spec("method2", 128).thetas == make_method2().thetas);

    const auto file = write_temp_csv("ropebound_spec.csv", "theta\n1.0\n");
    const auto custom = parse_schedule_spec("custom:@" + file.string(), 128);
    CHECK(custom.d == 2);  // the file fixes d, not the flag

    CHECK_THROWS_AS(parse_schedule_spec("", 128), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule_spec("std", 128), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule_spec("std:10:4", 128), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule_spec("pi:10000", 128), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule_spec("yarn:10000", 128), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule_spec("std:notanumber", 128), std::invalid_argument);
}

TEST_CASE("recipe strings render the spec grammar") {
    CHECK(recipe_string(make_standard(10000.0, 128)) == "std:10000");
    CHECK(recipe_string(make_pi_scaled(10000.0, 8.0, 128)) == "pi:10000:8");
    CHECK(recipe_string(make_ntk_scaled(10000.0, 8.0, 128)) == "ntk:10000:8");
    CHECK(recipe_string(make_method2()) == "method2");
    CHECK(recipe_string(make_custom({1.0})) == "custom");
    CHECK(recipe_string(make_method1(128)) == "std:5000000");
}
