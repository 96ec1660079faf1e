#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbm/ensemble_means.hpp"
#include "qbm/errors.hpp"
#include "qbm/indicators.hpp"
#include "qbm/regime_analysis.hpp"
#include "qbm/validation.hpp"

namespace py = pybind11;
using namespace qbm;

namespace {

ThermalTime thermal(double T, const ModelParams& p) { return ThermalTime::from_temperature(T, p); }

}  // namespace

PYBIND11_MODULE(_qbm_sbs, m) {
    m.doc() = "Ensemble means, bounds and oracle checks for SBS formation in quantum Brownian motion";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidityError>(m, "ValidityError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double M, double Omega, double gamma0_bar, double hbar, double kB) {
                 ModelParams p{M, Omega, gamma0_bar, hbar, kB};
                 p.validate();
                 return p;
             }),
             py::arg("M") = 1.0, py::arg("Omega") = 1.0, py::arg("gamma0_bar") = 1.0, py::arg("hbar") = 1.0,
             py::arg("kB") = 1.0)
        .def_readonly("M", &ModelParams::M)
        .def_readonly("Omega", &ModelParams::Omega)
        .def_readonly("gamma0_bar", &ModelParams::gamma0_bar)
        .def_readonly("hbar", &ModelParams::hbar)
        .def_readonly("kB", &ModelParams::kB);

    py::class_<FrequencyWindow>(m, "FrequencyWindow")
        .def(py::init([](double wl, double wu, double W) {
                 FrequencyWindow w{wl, wu, W};
                 w.validate();
                 return w;
             }),
             py::arg("omega_L"), py::arg("omega_U"), py::arg("Omega") = 1.0)
        .def_readonly("omega_L", &FrequencyWindow::omega_L)
        .def_readonly("omega_U", &FrequencyWindow::omega_U)
        .def_readonly("Omega", &FrequencyWindow::Omega);

    py::enum_<MeanKind>(m, "MeanKind")
        .value("LowT_f0", MeanKind::LowT_f0)
        .value("HighT_Gamma", MeanKind::HighT_Gamma)
        .value("HighT_B", MeanKind::HighT_B);

    py::class_<AsymptoteConstants>(m, "AsymptoteConstants")
        .def_readonly("A", &AsymptoteConstants::A)
        .def_readonly("B", &AsymptoteConstants::B)
        .def("plateau_min", &AsymptoteConstants::plateau_min)
        .def("plateau_mean", &AsymptoteConstants::plateau_mean);

    py::class_<MacBound>(m, "MacBound")
        .def_readonly("epsilon", &MacBound::epsilon)
        .def_readonly("plateau_min", &MacBound::plateau_min)
        .def_readonly("bound_exact", &MacBound::bound_exact)
        .def_readonly("bound_fast", &MacBound::bound_fast)
        .def("n_mac", &MacBound::n_mac, py::arg("delta_X"));

    m.def("si", &si);
    m.def("ci", &ci);
    m.def("coupling_constant", &coupling_constant, py::arg("params"), py::arg("m"));
    m.def("sample_frequencies", &sample_frequencies, py::arg("omega_L"), py::arg("omega_U"), py::arg("n"),
          py::arg("seed"), py::arg("Omega") = 1.0);

    m.def(
        "mean_exact",
        [](MeanKind k, double t, const FrequencyWindow& w, double T, const ModelParams& p) {
            return mean_exact(k, t, w, thermal(T, p), p);
        },
        py::arg("kind"), py::arg("t"), py::arg("window"), py::arg("T") = 0.0, py::arg("params") = ModelParams{});
    m.def(
        "mean_quadrature",
        [](MeanKind k, double t, const FrequencyWindow& w, double T, const ModelParams& p, double tol, bool exact) {
            return mean_quadrature(k, t, w, thermal(T, p), p, tol, exact ? Integrand::Exact : Integrand::LeadingOrder);
        },
        py::arg("kind"), py::arg("t"), py::arg("window"), py::arg("T") = 0.0, py::arg("params") = ModelParams{},
        py::arg("tol") = 1e-10, py::arg("exact_integrand") = false);
    m.def(
        "short_time_coefficient",
        [](MeanKind k, const FrequencyWindow& w, double T, const ModelParams& p) {
            return short_time_coefficient(k, w, thermal(T, p), p);
        },
        py::arg("kind"), py::arg("window"), py::arg("T") = 0.0, py::arg("params") = ModelParams{});
    m.def("asymptote_constants", &asymptote_constants, py::arg("kind"), py::arg("window"));
    m.def(
        "nmac_bound",
        [](MeanKind k, double eps, const FrequencyWindow& w, double T, const ModelParams& p) {
            return nmac_bound(k, eps, w, thermal(T, p), p);
        },
        py::arg("kind"), py::arg("epsilon"), py::arg("window"), py::arg("T") = 0.0, py::arg("params") = ModelParams{});

    m.def("check_names", [] {
        std::vector<std::string> out;
        for (const auto& c : validation_checks()) out.push_back(c.name);
        return out;
    });
    m.def(
        "run_checks",
        [](const std::vector<std::string>& names, std::optional<double> tolerance) {
            ValidationOptions o;
            o.tolerance = tolerance;
            py::list out;
            std::vector<CheckResult> results;
            {
                py::gil_scoped_release release;
                results = run_checks(names, o);
            }
            for (const auto& r : results) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["measured"] = r.measured;
                d["threshold"] = r.threshold;
                d["comparison"] = r.comparison;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                py::dict metrics;
                for (const auto& [k, v] : r.metrics) metrics[py::str(k)] = v;
                d["metrics"] = metrics;
                out.append(d);
            }
            return out;
        },
        py::arg("names") = std::vector<std::string>{}, py::arg("tolerance") = std::nullopt);
}
