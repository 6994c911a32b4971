#pragma once

#include <string>
#include <variant>
#include <vector>

namespace ropebound {

// Provenance of a schedule: carries every parameter needed to rebuild the
// exact theta vector.
struct StandardRecipe {
    double base;
};
struct PiScaledRecipe {
    double base;
    double scale;
};
struct NtkScaledRecipe {
    double base;
    double scale;
};
struct Method2Recipe {};
struct CustomRecipe {};

using Recipe =
    std::variant<StandardRecipe, PiScaledRecipe, NtkScaledRecipe, Method2Recipe, CustomRecipe>;

// Rotation-angle schedule theta_0 .. theta_{d/2-1} for one attention head.
// theta_i is the frequency (radians per position step) of the i-th
// 2-dimensional block. Values are immutable after construction and safe to
// share across threads.
struct ThetaSchedule {
    int d = 0;                   // head dimension, even, >= 2
    std::vector<double> thetas;  // d/2 positive finite frequencies
    Recipe recipe;

    int num_freqs() const { return d / 2; }
};

// theta_i = base^(-2i/d). theta_0 is exactly 1; for base > 1 the vector is
// strictly decreasing.
ThetaSchedule make_standard(double base, int d);

// Position interpolation by relative scale s expressed in frequency space:
// theta_i = base^(-2i/d) / s. Rotating by angle (m/s)*theta equals rotating
// by m*(theta/s), so downstream analyses stay indexed by integer m.
ThetaSchedule make_pi_scaled(double base, double s, int d);

// Base after NTK-aware scaling: base * s^(d/(d-2)), chosen so the lowest
// frequency is interpolated: (s*T) * b_new^(-(d-2)/d) == T * base^(-(d-2)/d).
double ntk_base(double base, double s, int d);

// Standard schedule built on ntk_base(base, s, d).
ThetaSchedule make_ntk_scaled(double base, double s, int d);

// theta_i = (5e6)^(-2i/d).
ThetaSchedule make_method1(int d);

// Piecewise schedule, defined for d = 128 only:
//   i >= 44: (1e4)^(-2i/128) / 8
//   i <  44: (1e4 * 8^(128/88))^(-2i/128)
// The two branch formulas agree at i = 44.
ThetaSchedule make_method2(int d = 128);

// User-supplied frequencies, stored as-is; d = 2 * thetas.size().
ThetaSchedule make_custom(std::vector<double> thetas);

// Rebuild a schedule from its recipe. Bit-identical to the original.
ThetaSchedule rebuild(const ThetaSchedule& sched);

// One-column CSV with header "theta", one frequency per row.
ThetaSchedule load_custom_csv(const std::string& path);

// Schedule spec grammar:
//   std:<base> | pi:<base>:<s> | ntk:<base>:<s> | method1 | method2 | custom:@<path>
// d applies to every form except custom, where the file fixes the dimension.
ThetaSchedule parse_schedule_spec(const std::string& spec, int d);

// Spec-string rendering of a schedule's recipe, e.g. "std:10000".
std::string recipe_string(const ThetaSchedule& sched);

}  // namespace ropebound
