#include "ropebound/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace ropebound {

namespace {

using nlohmann::json;

const char* metric_name(CurveMetric metric) {
    switch (metric) {
        case CurveMetric::BValue: return "b_value";
        case CurveMetric::WeightedBValue: return "weighted_b_value";
        case CurveMetric::UpperBound: return "upper_bound_factor";
    }
    return "?";
}

const char* dist_name(ComponentDist dist) {
    return dist == ComponentDist::Uniform ? "uniform" : "gaussian";
}

json config_json(const McConfig& cfg, const std::string& schedule, int d, std::int64_t m) {
    return json{{"schedule", schedule}, {"d", d},
                {"m", m},               {"n_samples", cfg.n_samples},
                {"sigma", cfg.sigma},   {"mu", cfg.mu},
                {"eps_scale", cfg.eps_scale},
                {"seed", cfg.seed},     {"dist", dist_name(cfg.dist)}};
}

json length_json(const LengthResult& r) {
    json out{{"base_or_schedule", r.base_or_schedule},
             {"effective_length", r.effective_length}};
    if (r.first_violation_m) {
        out["first_violation_m"] = *r.first_violation_m;
    } else {
        out["first_violation_m"] = nullptr;
    }
    return out;
}

}  // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const CurveSamples& curve) {
    std::ostringstream out;
    out << "m,value\n";
    for (const auto& [m, value] : curve.points) {
        out << m << ',' << format_g17(value) << '\n';
    }
    return out.str();
}

std::string to_csv(const OodReport& report) {
    std::ostringstream out;
    out << "dim,trained_max_angle,extended_max_angle,full_period_covered,ood\n";
    for (const OodDimension& dim : report.per_dim) {
        out << dim.dim << ',' << format_g17(dim.trained_max_angle) << ','
            << format_g17(dim.extended_max_angle) << ',' << (dim.full_period_covered ? 1 : 0)
            << ',' << (dim.ood ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<Table2Row>& rows) {
    std::ostringstream out;
    out << "context_length,base_lower_bound\n";
    for (const Table2Row& row : rows) {
        out << row.context_length << ',' << format_g17(row.base_lower_bound) << '\n';
    }
    return out.str();
}

std::string to_csv(const BoundResult& result) {
    std::ostringstream out;
    out << "target_length,d,base,bracket_lo,bracket_hi,verified\n";
    out << result.target_length << ',' << result.d << ',' << format_g17(result.base) << ','
        << format_g17(result.bracket_lo) << ',' << format_g17(result.bracket_hi) << ','
        << (result.verified ? 1 : 0) << '\n';
    return out.str();
}

std::string to_csv(const LengthResult& result) {
    std::ostringstream out;
    out << "base_or_schedule,effective_length,first_violation_m\n";
    out << result.base_or_schedule << ',' << result.effective_length << ',';
    if (result.first_violation_m) {
        out << *result.first_violation_m;
    } else {
        out << "none";
    }
    out << '\n';
    return out.str();
}

std::string to_csv(const McReport& report, const McConfig& cfg, const std::string& schedule,
                   int d, std::int64_t m) {
    std::ostringstream out;
    out << "schedule,d,m,n_samples,sigma,mu,eps_scale,seed,dist,gap_hat,stderr,theory,z\n";
    out << schedule << ',' << d << ',' << m << ',' << cfg.n_samples << ','
        << format_g17(cfg.sigma) << ',' << format_g17(cfg.mu) << ','
        << format_g17(cfg.eps_scale) << ',' << cfg.seed << ',' << dist_name(cfg.dist) << ','
        << format_g17(report.gap_hat) << ',' << format_g17(report.standard_error) << ','
        << format_g17(report.theory) << ',' << format_g17(report.z) << '\n';
    return out.str();
}

std::string to_json(const BoundResult& result) {
    const json out{{"target_length", result.target_length},
                   {"d", result.d},
                   {"base", result.base},
                   {"bracket", json{{"lo", result.bracket_lo}, {"hi", result.bracket_hi}}},
                   {"verified", result.verified}};
    return out.dump();
}

std::string to_json(const LengthResult& result) {
    return length_json(result).dump();
}

std::string to_json(const McReport& report, const McConfig& cfg, const std::string& schedule,
                    int d, std::int64_t m) {
    const json out{{"gap_hat", report.gap_hat},
                   {"stderr", report.standard_error},
                   {"theory", report.theory},
                   {"z", report.z},
                   {"config", config_json(cfg, schedule, d, m)}};
    return out.dump();
}

std::string to_json(const CurveSamples& curve) {
    json points = json::array();
    for (const auto& [m, value] : curve.points) points.push_back(json::array({m, value}));
    return json{{"metric", metric_name(curve.metric)}, {"points", points}}.dump();
}

std::string to_json(const OodReport& report) {
    json dims = json::array();
    for (const OodDimension& dim : report.per_dim) {
        dims.push_back(json{{"dim", dim.dim},
                            {"trained_max_angle", dim.trained_max_angle},
                            {"extended_max_angle", dim.extended_max_angle},
                            {"full_period_covered", dim.full_period_covered},
                            {"ood", dim.ood}});
    }
    return json{{"per_dim", dims}, {"any_ood", report.any_ood}}.dump();
}

std::string to_json(const std::vector<Table2Row>& rows) {
    json arr = json::array();
    for (const Table2Row& row : rows) {
        arr.push_back(json{{"context_length", row.context_length},
                           {"base_lower_bound", row.base_lower_bound}});
    }
    return arr.dump();
}

}  // namespace ropebound
