#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ropebound/bounds.hpp"
#include "ropebound/decay.hpp"
#include "ropebound/mc.hpp"
#include "ropebound/ood.hpp"
#include "ropebound/report.hpp"
#include "ropebound/rope.hpp"
#include "ropebound/schedule.hpp"

namespace py = pybind11;
using namespace ropebound;

PYBIND11_MODULE(_ropebound, m) {
    m.doc() = "Rotation-angle schedule analysis: discrimination decay, effective context "
              "length, base lower bounds, Monte Carlo checks and OOD diagnostics.";

    py::class_<ThetaSchedule>(m, "ThetaSchedule")
        .def_readonly("d", &ThetaSchedule::d)
        .def_readonly("thetas", &ThetaSchedule::thetas)
        .def_property_readonly("recipe", [](const ThetaSchedule& s) { return recipe_string(s); })
        .def("__len__", [](const ThetaSchedule& s) { return s.thetas.size(); })
        .def("__repr__", [](const ThetaSchedule& s) {
            return "ThetaSchedule(" + recipe_string(s) + ", d=" + std::to_string(s.d) + ")";
        });

    m.def("make_standard", &make_standard, py::arg("base"), py::arg("d"));
    m.def("make_pi_scaled", &make_pi_scaled, py::arg("base"), py::arg("s"), py::arg("d"));
    m.def("ntk_base", &ntk_base, py::arg("base"), py::arg("s"), py::arg("d"));
    m.def("make_ntk_scaled", &make_ntk_scaled, py::arg("base"), py::arg("s"), py::arg("d"));
    m.def("make_method1", &make_method1, py::arg("d") = 128);
    m.def("make_method2", &make_method2, py::arg("d") = 128);
    m.def("make_custom", &make_custom, py::arg("thetas"));
    m.def("load_custom_csv", &load_custom_csv, py::arg("path"));
    m.def("parse_schedule_spec", &parse_schedule_spec, py::arg("spec"), py::arg("d") = 128);

    m.def(
        "rotate",
        [](const std::vector<double>& x, std::int64_t m, const ThetaSchedule& sched) {
            return rotate(x, m, sched);
        },
        py::arg("x"), py::arg("m"), py::arg("sched"));
    m.def(
        "attention_score",
        [](const std::vector<double>& q, const std::vector<double>& k, std::int64_t m,
           const ThetaSchedule& sched) { return attention_score(q, k, m, sched); },
        py::arg("q"), py::arg("k"), py::arg("m"), py::arg("sched"));

    m.def("b_value", &b_value, py::arg("sched"), py::arg("m"));
    m.def(
        "weighted_b_value",
        [](const ThetaSchedule& sched, const std::vector<double>& sigmas, std::int64_t m) {
            return weighted_b_value(sched, sigmas, m);
        },
        py::arg("sched"), py::arg("sigmas"), py::arg("m"));
    m.def("upper_bound_factor", &upper_bound_factor, py::arg("sched"), py::arg("m"));
    m.def("first_violation", &first_violation, py::arg("sched"), py::arg("m_lo"),
          py::arg("m_hi"));
    m.def("violation_count", &violation_count, py::arg("sched"), py::arg("m_lo"),
          py::arg("m_hi"));

    py::enum_<CurveMetric>(m, "CurveMetric")
        .value("B_VALUE", CurveMetric::BValue)
        .value("WEIGHTED_B_VALUE", CurveMetric::WeightedBValue)
        .value("UPPER_BOUND", CurveMetric::UpperBound);

    py::class_<CurveSamples>(m, "CurveSamples")
        .def_readonly("metric", &CurveSamples::metric)
        .def_readonly("points", &CurveSamples::points)
        .def("csv", [](const CurveSamples& c) { return to_csv(c); });
    m.def(
        "sample_curve",
        [](const ThetaSchedule& sched, CurveMetric metric, std::int64_t m_max,
           std::int64_t stride, const std::vector<double>& sigmas) {
            return sample_curve(sched, metric, m_max, stride, sigmas);
        },
        py::arg("sched"), py::arg("metric"), py::arg("m_max"), py::arg("stride") = 1,
        py::arg("sigmas") = std::vector<double>{});

    py::class_<LengthResult>(m, "LengthResult")
        .def_readonly("base_or_schedule", &LengthResult::base_or_schedule)
        .def_readonly("effective_length", &LengthResult::effective_length)
        .def_readonly("first_violation_m", &LengthResult::first_violation_m)
        .def("json", [](const LengthResult& r) { return to_json(r); });
    m.def("effective_length", &effective_length, py::arg("sched"), py::arg("m_limit"));

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("target_length", &BoundResult::target_length)
        .def_readonly("d", &BoundResult::d)
        .def_readonly("base", &BoundResult::base)
        .def_readonly("bracket_lo", &BoundResult::bracket_lo)
        .def_readonly("bracket_hi", &BoundResult::bracket_hi)
        .def_readonly("verified", &BoundResult::verified)
        .def_readonly("bracket_probe_monotone", &BoundResult::bracket_probe_monotone)
        .def("json", [](const BoundResult& r) { return to_json(r); });
    m.def("lower_bound_base", &lower_bound_base, py::arg("target_length"), py::arg("d") = 128,
          py::arg("tol_rel") = 1e-3, py::arg("base_max") = 1e12,
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "table2",
        [](int d, int k_unit, double tol_rel) {
            std::vector<std::pair<std::int64_t, double>> rows;
            py::gil_scoped_release release;
            for (const Table2Row& row : table2(d, k_unit, tol_rel)) {
                rows.emplace_back(row.context_length, row.base_lower_bound);
            }
            return rows;
        },
        py::arg("d") = 128, py::arg("k_unit") = 1024, py::arg("tol_rel") = 1e-3);

    py::enum_<ComponentDist>(m, "ComponentDist")
        .value("GAUSSIAN", ComponentDist::Gaussian)
        .value("UNIFORM", ComponentDist::Uniform);

    py::class_<McConfig>(m, "McConfig")
        .def(py::init([](std::int64_t n_samples, double sigma, double mu, double eps_scale,
                         std::uint64_t seed, ComponentDist dist) {
                 return McConfig{n_samples, sigma, mu, eps_scale, seed, dist};
             }),
             py::arg("n_samples") = 100000, py::arg("sigma") = 1.0, py::arg("mu") = 0.0,
             py::arg("eps_scale") = 0.1, py::arg("seed") = 0,
             py::arg("dist") = ComponentDist::Gaussian)
        .def_readwrite("n_samples", &McConfig::n_samples)
        .def_readwrite("sigma", &McConfig::sigma)
        .def_readwrite("mu", &McConfig::mu)
        .def_readwrite("eps_scale", &McConfig::eps_scale)
        .def_readwrite("seed", &McConfig::seed)
        .def_readwrite("dist", &McConfig::dist);

    py::class_<McReport>(m, "McReport")
        .def_readonly("gap_hat", &McReport::gap_hat)
        .def_readonly("stderr", &McReport::standard_error)
        .def_readonly("theory", &McReport::theory)
        .def_readonly("z", &McReport::z);
    m.def("estimate_gap", &estimate_gap, py::arg("sched"), py::arg("m"), py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "estimate_gap_hetero",
        [](const ThetaSchedule& sched, std::int64_t m, const std::vector<double>& sigmas,
           const McConfig& cfg) {
            py::gil_scoped_release release;
            return estimate_gap_hetero(sched, m, sigmas, cfg);
        },
        py::arg("sched"), py::arg("m"), py::arg("sigmas"), py::arg("cfg"));
    m.def("argmax_win_rate", &argmax_win_rate, py::arg("sched"), py::arg("m"),
          py::arg("context_size"), py::arg("cfg"), py::arg("null_similar") = false,
          py::call_guard<py::gil_scoped_release>());

    py::class_<OodDimension>(m, "OodDimension")
        .def_readonly("dim", &OodDimension::dim)
        .def_readonly("trained_max_angle", &OodDimension::trained_max_angle)
        .def_readonly("extended_max_angle", &OodDimension::extended_max_angle)
        .def_readonly("full_period_covered", &OodDimension::full_period_covered)
        .def_readonly("ood", &OodDimension::ood);
    py::class_<OodReport>(m, "OodReport")
        .def_readonly("per_dim", &OodReport::per_dim)
        .def_readonly("any_ood", &OodReport::any_ood)
        .def("csv", [](const OodReport& r) { return to_csv(r); });
    m.def("ood_report", &ood_report, py::arg("train_sched"), py::arg("t_train"),
          py::arg("new_sched"), py::arg("t_new"));

    py::register_exception<UnattainableError>(m, "UnattainableError", PyExc_RuntimeError);
}
