#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ropebound/bounds.hpp"
#include "ropebound/decay.hpp"
#include "ropebound/mc.hpp"
#include "ropebound/ood.hpp"
#include "ropebound/report.hpp"
#include "ropebound/rope.hpp"
#include "ropebound/schedule.hpp"

namespace {

using namespace ropebound;

struct OutputOptions {
    std::string format;  // "csv" or "json"
    std::string path;    // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& out, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write output to this file instead of stdout");
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(out.path);
    if (!file) throw std::runtime_error("cannot open output file '" + out.path + "'");
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

// Context length with an optional k/M suffix expanded under the active
// k-convention: "32k" -> 32 * unit, "1M" -> unit^2.
std::int64_t parse_length(const std::string& text, int k_unit) {
    if (text.empty()) throw std::invalid_argument("empty length");
    std::string digits = text;
    std::int64_t scale = 1;
    const char suffix = digits.back();
    if (suffix == 'k' || suffix == 'K') {
        scale = k_unit;
        digits.pop_back();
    } else if (suffix == 'M') {
        scale = static_cast<std::int64_t>(k_unit) * k_unit;
        digits.pop_back();
    }
    std::size_t consumed = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(digits, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse length '" + text + "'");
    }
    if (consumed != digits.size()) {
        throw std::invalid_argument("cannot parse length '" + text + "'");
    }
    return value * scale;
}

std::vector<std::int64_t> parse_range_ends(const std::string& text) {
    std::vector<std::int64_t> ends;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ends.push_back(std::stoll(item));
    }
    if (ends.empty()) throw std::invalid_argument("--ranges needs at least one end");
    return ends;
}

int run(int argc, char** argv) {
    CLI::App app{"Rotation-angle schedule analysis: discrimination decay, effective "
                 "context length, base lower bounds, Monte Carlo checks and "
                 "out-of-distribution diagnostics"};
    app.require_subcommand(1);

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "Solve the base lower bound for a context length");
    std::string bound_length;
    int bound_dim = 128;
    double bound_tol = 1e-3;
    double bound_base_max = 1e12;
    int bound_k_unit = 1024;
    OutputOptions bound_out;
    bound_cmd->add_option("--length", bound_length, "Target context length (suffix k or M allowed)")
        ->required();
    bound_cmd->add_option("--dim", bound_dim, "Head dimension")->capture_default_str();
    bound_cmd->add_option("--tol", bound_tol, "Relative bracket tolerance")->capture_default_str();
    bound_cmd->add_option("--base-max", bound_base_max, "Give up above this base")
        ->capture_default_str();
    bound_cmd->add_option("--k-convention", bound_k_unit, "Multiplier for the k suffix")
        ->check(CLI::IsMember({1024, 1000}))
        ->capture_default_str();
    add_output_options(bound_cmd, bound_out, "json");

    // length
    auto* length_cmd = app.add_subcommand("length", "Scan the effective context length of a schedule");
    std::string length_spec;
    int length_dim = 128;
    std::int64_t length_max_m = 1000000;
    OutputOptions length_out;
    length_cmd->add_option("--schedule", length_spec, "Schedule spec")->required();
    length_cmd->add_option("--dim", length_dim, "Head dimension")->capture_default_str();
    length_cmd->add_option("--max-m", length_max_m, "Scan limit")->capture_default_str();
    add_output_options(length_cmd, length_out, "json");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Sample a decay curve for plotting");
    std::string curve_spec;
    int curve_dim = 128;
    std::string curve_metric = "b";
    std::int64_t curve_max_m = 0;
    std::int64_t curve_stride = 1;
    OutputOptions curve_out;
    curve_cmd->add_option("--schedule", curve_spec, "Schedule spec")->required();
    curve_cmd->add_option("--dim", curve_dim, "Head dimension")->capture_default_str();
    curve_cmd->add_option("--metric", curve_metric, "b (discrimination) or upper (score bound)")
        ->check(CLI::IsMember({"b", "upper"}))
        ->capture_default_str();
    curve_cmd->add_option("--max-m", curve_max_m, "Largest relative distance")->required();
    curve_cmd->add_option("--stride", curve_stride, "Sample stride")->capture_default_str();
    add_output_options(curve_cmd, curve_out, "csv");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of the discrimination gap");
    std::string verify_spec;
    int verify_dim = 128;
    std::int64_t verify_m = 0;
    McConfig verify_cfg;
    std::string verify_dist = "gaussian";
    OutputOptions verify_out;
    verify_cmd->add_option("--schedule", verify_spec, "Schedule spec")->required();
    verify_cmd->add_option("--dim", verify_dim, "Head dimension")->capture_default_str();
    verify_cmd->add_option("--m", verify_m, "Relative distance")->capture_default_str();
    verify_cmd->add_option("--samples", verify_cfg.n_samples, "Sample count")->capture_default_str();
    verify_cmd->add_option("--sigma", verify_cfg.sigma, "Component standard deviation")
        ->capture_default_str();
    verify_cmd->add_option("--mu", verify_cfg.mu, "Component mean")->capture_default_str();
    verify_cmd->add_option("--eps", verify_cfg.eps_scale, "Similar-key perturbation std")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_cfg.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--dist", verify_dist, "Component distribution")
        ->check(CLI::IsMember({"gaussian", "uniform"}))
        ->capture_default_str();
    add_output_options(verify_cmd, verify_out, "json");

    // ood
    auto* ood_cmd = app.add_subcommand("ood", "Rotation-angle out-of-distribution report");
    std::string ood_train_spec, ood_new_spec;
    std::int64_t ood_train_len = 0, ood_new_len = 0;
    int ood_dim = 128;
    OutputOptions ood_out;
    ood_cmd->add_option("--train-schedule", ood_train_spec, "Training schedule spec")->required();
    ood_cmd->add_option("--train-len", ood_train_len, "Trained context length")->required();
    ood_cmd->add_option("--new-schedule", ood_new_spec, "Extension schedule spec")->required();
    ood_cmd->add_option("--new-len", ood_new_len, "Extended context length")->required();
    ood_cmd->add_option("--dim", ood_dim, "Head dimension")->capture_default_str();
    add_output_options(ood_cmd, ood_out, "csv");

    // table2
    auto* table_cmd = app.add_subcommand("table2", "Base lower bounds for 1k..1M context lengths");
    int table_dim = 128;
    std::string table_conv = "1024";
    double table_tol = 1e-3;
    OutputOptions table_out;
    table_cmd->add_option("--dim", table_dim, "Head dimension")->capture_default_str();
    table_cmd->add_option("--k-convention", table_conv, "1024, 1000 or both")
        ->check(CLI::IsMember({"1024", "1000", "both"}))
        ->capture_default_str();
    table_cmd->add_option("--tol", table_tol, "Relative bracket tolerance")->capture_default_str();
    add_output_options(table_cmd, table_out, "csv");

    // compare-methods
    auto* compare_cmd =
        app.add_subcommand("compare-methods", "Violation counts and angle coverage of the two "
                                              "reference extension schedules");
    std::string compare_ranges = "15360,30720";
    double compare_train_base = 1e4;
    std::int64_t compare_train_len = 4096;
    std::int64_t compare_new_len = 32768;
    OutputOptions compare_out;
    compare_cmd->add_option("--ranges", compare_ranges, "Comma-separated scan ends, each [1, end]")
        ->capture_default_str();
    compare_cmd->add_option("--train-base", compare_train_base, "Base of the pre-trained schedule")
        ->capture_default_str();
    compare_cmd->add_option("--train-len", compare_train_len, "Pre-trained context length")
        ->capture_default_str();
    compare_cmd->add_option("--new-len", compare_new_len, "Extended context length")
        ->capture_default_str();
    add_output_options(compare_cmd, compare_out, "csv");

    CLI11_PARSE(app, argc, argv);

    if (bound_cmd->parsed()) {
        const std::int64_t length = parse_length(bound_length, bound_k_unit);
        const BoundResult result = lower_bound_base(length, bound_dim, bound_tol, bound_base_max);
        if (!result.bracket_probe_monotone) {
            std::cerr << "warning: non-monotone feasibility pattern inside the final bracket\n";
        }
        emit(bound_out, bound_out.format == "json" ? to_json(result) : to_csv(result));
        return 0;
    }

    if (length_cmd->parsed()) {
        const ThetaSchedule sched = parse_schedule_spec(length_spec, length_dim);
        const LengthResult result = effective_length(sched, length_max_m);
        emit(length_out, length_out.format == "json" ? to_json(result) : to_csv(result));
        return 0;
    }

    if (curve_cmd->parsed()) {
        const ThetaSchedule sched = parse_schedule_spec(curve_spec, curve_dim);
        const CurveMetric metric =
            curve_metric == "upper" ? CurveMetric::UpperBound : CurveMetric::BValue;
        const CurveSamples curve = sample_curve(sched, metric, curve_max_m, curve_stride);
        emit(curve_out, curve_out.format == "json" ? to_json(curve) : to_csv(curve));
        return 0;
    }

    if (verify_cmd->parsed()) {
        verify_cfg.dist =
            verify_dist == "uniform" ? ComponentDist::Uniform : ComponentDist::Gaussian;
        const ThetaSchedule sched = parse_schedule_spec(verify_spec, verify_dim);
        const McReport report = estimate_gap(sched, verify_m, verify_cfg);
        const std::string spec = recipe_string(sched);
        emit(verify_out, verify_out.format == "json"
                             ? to_json(report, verify_cfg, spec, sched.d, verify_m)
                             : to_csv(report, verify_cfg, spec, sched.d, verify_m));
        return 0;
    }

    if (ood_cmd->parsed()) {
        const ThetaSchedule train = parse_schedule_spec(ood_train_spec, ood_dim);
        const ThetaSchedule extended = parse_schedule_spec(ood_new_spec, ood_dim);
        const OodReport report = ood_report(train, ood_train_len, extended, ood_new_len);
        emit(ood_out, ood_out.format == "json" ? to_json(report) : to_csv(report));
        return 0;
    }

    if (table_cmd->parsed()) {
        std::vector<Table2Row> rows;
        if (table_conv == "both" || table_conv == "1024") {
            const auto part = table2(table_dim, 1024, table_tol);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        if (table_conv == "both" || table_conv == "1000") {
            const auto part = table2(table_dim, 1000, table_tol);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        emit(table_out, table_out.format == "json" ? to_json(rows) : to_csv(rows));
        return 0;
    }

    if (compare_cmd->parsed()) {
        const auto ends = parse_range_ends(compare_ranges);
        const ThetaSchedule trained = make_standard(compare_train_base, 128);
        struct Entry {
            std::string name;
            ThetaSchedule sched;
        };
        const std::vector<Entry> methods{{"method1", make_method1(128)},
                                         {"method2", make_method2(128)}};
        std::ostringstream csv;
        nlohmann::json rows = nlohmann::json::array();
        csv << "method,m_lo,m_hi,violations,ood_free\n";
        for (const Entry& method : methods) {
            const bool ood_free =
                !ood_report(trained, compare_train_len, method.sched, compare_new_len).any_ood;
            for (std::int64_t end : ends) {
                const std::int64_t count = violation_count(method.sched, 1, end);
                csv << method.name << ",1," << end << ',' << count << ',' << (ood_free ? 1 : 0)
                    << '\n';
                rows.push_back({{"method", method.name},
                                {"m_lo", 1},
                                {"m_hi", end},
                                {"violations", count},
                                {"ood_free", ood_free}});
            }
        }
        emit(compare_out, compare_out.format == "json" ? rows.dump() : csv.str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ropebound::UnattainableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
