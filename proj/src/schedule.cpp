#include "ropebound/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ropebound {

namespace {

void check_dim(int d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("head dimension must be an even integer >= 2, got " +
                                    std::to_string(d));
    }
}

void check_base(double base) {
    if (!(base > 0.0) || !std::isfinite(base)) {
        throw std::invalid_argument("base must be a positive finite real");
    }
}

std::vector<double> standard_thetas(double base, int d) {
    std::vector<double> thetas(static_cast<std::size_t>(d / 2));
    for (int i = 0; i < d / 2; ++i) {
        thetas[static_cast<std::size_t>(i)] = std::pow(base, -2.0 * i / d);
    }
    return thetas;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& text, const char* what) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " from '" + text + "'");
    }
    if (consumed != text.size()) {
        throw std::invalid_argument(std::string("trailing characters after ") + what + " in '" +
                                    text + "'");
    }
    return value;
}

std::string number_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ThetaSchedule make_standard(double base, int d) {
    check_base(base);
    check_dim(d);
    return ThetaSchedule{d, standard_thetas(base, d), StandardRecipe{base}};
}

ThetaSchedule make_pi_scaled(double base, double s, int d) {
    check_base(base);
    check_dim(d);
    if (!(s >= 1.0) || !std::isfinite(s)) {
        throw std::invalid_argument("position-interpolation scale must be >= 1");
    }
    auto thetas = standard_thetas(base, d);
    for (double& t : thetas) t /= s;
    return ThetaSchedule{d, std::move(thetas), PiScaledRecipe{base, s}};
}

double ntk_base(double base, double s, int d) {
    check_base(base);
    if (d < 4 || d % 2 != 0) {
        throw std::invalid_argument("NTK scaling needs an even head dimension >= 4");
    }
    if (!(s >= 1.0) || !std::isfinite(s)) {
        throw std::invalid_argument("NTK scale must be >= 1");
    }
    return base * std::pow(s, static_cast<double>(d) / (d - 2));
}

ThetaSchedule make_ntk_scaled(double base, double s, int d) {
    const double scaled = ntk_base(base, s, d);
    return ThetaSchedule{d, standard_thetas(scaled, d), NtkScaledRecipe{base, s}};
}

ThetaSchedule make_method1(int d) {
    return make_standard(5e6, d);
}

ThetaSchedule make_method2(int d) {
    if (d != 128) {
        throw std::invalid_argument("the piecewise schedule is defined for d = 128 only");
    }
    const double high_freq_base = 1e4 * std::pow(8.0, 128.0 / 88.0);
    std::vector<double> thetas(64);
    for (int i = 0; i < 64; ++i) {
        if (i >= 44) {
            thetas[static_cast<std::size_t>(i)] = std::pow(1e4, -2.0 * i / 128.0) / 8.0;
        } else {
            thetas[static_cast<std::size_t>(i)] = std::pow(high_freq_base, -2.0 * i / 128.0);
        }
    }
    return ThetaSchedule{128, std::move(thetas), Method2Recipe{}};
}

ThetaSchedule make_custom(std::vector<double> thetas) {
    if (thetas.empty()) {
        throw std::invalid_argument("custom schedule needs at least one frequency");
    }
    for (double t : thetas) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("custom frequencies must be positive and finite");
        }
    }
    const int d = 2 * static_cast<int>(thetas.size());
    return ThetaSchedule{d, std::move(thetas), CustomRecipe{}};
}

ThetaSchedule rebuild(const ThetaSchedule& sched) {
    const int d = sched.d;
    return std::visit(
        [&](const auto& recipe) -> ThetaSchedule {
            using R = std::decay_t<decltype(recipe)>;
            if constexpr (std::is_same_v<R, StandardRecipe>) {
                return make_standard(recipe.base, d);
            } else if constexpr (std::is_same_v<R, PiScaledRecipe>) {
                return make_pi_scaled(recipe.base, recipe.scale, d);
            } else if constexpr (std::is_same_v<R, NtkScaledRecipe>) {
                return make_ntk_scaled(recipe.base, recipe.scale, d);
            } else if constexpr (std::is_same_v<R, Method2Recipe>) {
                return make_method2(d);
            } else {
                return make_custom(sched.thetas);
            }
        },
        sched.recipe);
}

ThetaSchedule load_custom_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open schedule file '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || trim(line) != "theta") {
        throw std::runtime_error("schedule file '" + path + "' must start with header 'theta'");
    }
    std::vector<double> thetas;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string cell = trim(line);
        if (cell.empty()) continue;
        try {
            thetas.push_back(parse_real(cell, "theta"));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return make_custom(std::move(thetas));
}

ThetaSchedule parse_schedule_spec(const std::string& spec, int d) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);

    if (parts.empty()) throw std::invalid_argument("empty schedule spec");
    const std::string& kind = parts[0];

    if (kind == "method1" && parts.size() == 1) return make_method1(d);
    if (kind == "method2" && parts.size() == 1) return make_method2(d);
    if (kind == "std" && parts.size() == 2) {
        return make_standard(parse_real(parts[1], "base"), d);
    }
    if (kind == "pi" && parts.size() == 3) {
        return make_pi_scaled(parse_real(parts[1], "base"), parse_real(parts[2], "scale"), d);
    }
    if (kind == "ntk" && parts.size() == 3) {
        return make_ntk_scaled(parse_real(parts[1], "base"), parse_real(parts[2], "scale"), d);
    }
    if (kind == "custom" && parts.size() == 2 && !parts[1].empty() && parts[1][0] == '@') {
        // the file fixes the dimension; d is ignored for this form
        return load_custom_csv(parts[1].substr(1));
    }
    throw std::invalid_argument(
        "bad schedule spec '" + spec +
        "' (expected std:<base> | pi:<base>:<s> | ntk:<base>:<s> | method1 | method2 | "
        "custom:@<path>)");
}

std::string recipe_string(const ThetaSchedule& sched) {
    return std::visit(
        [](const auto& recipe) -> std::string {
            using R = std::decay_t<decltype(recipe)>;
            if constexpr (std::is_same_v<R, StandardRecipe>) {
                return "std:" + number_string(recipe.base);
            } else if constexpr (std::is_same_v<R, PiScaledRecipe>) {
                return "pi:" + number_string(recipe.base) + ":" + number_string(recipe.scale);
            } else if constexpr (std::is_same_v<R, NtkScaledRecipe>) {
                return "ntk:" + number_string(recipe.base) + ":" + number_string(recipe.scale);
            } else if constexpr (std::is_same_v<R, Method2Recipe>) {
                return "method2";
            } else {
                return "custom";
            }
        },
        sched.recipe);
}

}  // namespace ropebound
