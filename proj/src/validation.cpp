// validation.cpp: Oracle checks with measured errors and pass/fail thresholds

#include "qbm/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qbm/ensemble_means.hpp"
#include "qbm/errors.hpp"
#include "qbm/fock_oracle.hpp"
#include "qbm/indicators.hpp"
#include "qbm/io.hpp"
#include "qbm/quadrature.hpp"
#include "qbm/regime_analysis.hpp"
#include "qbm/special_functions.hpp"
#include "qbm/summation.hpp"

namespace qbm {

namespace {

using std::numbers::pi;

const FrequencyWindow kWindow{10.0, 20.0, 1.0};
constexpr double kHighT = 1000.0;  // kB T = 50 hbar omega_U in natural units

double u01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double threshold_or(const ValidationOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

CheckResult make(const std::string& name, double measured, double threshold, const std::string& cmp) {
    CheckResult r;
    r.name = name;
    r.measured = measured;
    r.threshold = threshold;
    r.comparison = cmp;
    r.passed = cmp == "<=" ? measured <= threshold : cmp == "<" ? measured < threshold : measured >= threshold;
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> logspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

std::pair<double, double> quadrature_sici(double x) {
    QuadratureOptions opt;
    opt.rel_tol = 1e-15;
    opt.abs_tol = 1e-17;
    opt.max_intervals = 200000;
    opt.initial_intervals = static_cast<std::size_t>(std::ceil(x / pi)) + 1;
    const double s = integrate_adaptive([](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }, 0.0, x, opt).value;
    const double cin_x = integrate_adaptive(
                             [](double u) {
                                 if (u == 0.0) return 0.0;
                                 const double h = std::sin(0.5 * u);
                                 return 2.0 * h * h / u;
                             },
                             0.0, x, opt)
                             .value;
    return {s, kEulerGamma + std::log(x) - cin_x};
}

// ---------------------------------------------------------------------------

CheckResult check_closed_form(const ValidationOptions& o) {
    const double tol = threshold_or(o, 1e-7);
    const ModelParams params;
    std::mt19937_64 gen(o.seed);
    double worst_low = 0.0, worst_high = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double W = 0.5 + 1.5 * u01(gen);
        const double wl = W * (1.5 + 18.5 * u01(gen));
        const double wu = wl + W * (1.0 + 29.0 * u01(gen));
        const FrequencyWindow w{wl, wu, W};
        const double t = std::exp(std::log(1e-4 / wu) + u01(gen) * std::log(100.0 * wu / (1e-4 * wl)));
        const auto low = ThermalTime::from_temperature(0.0, params);
        const auto hot = ThermalTime::from_tau(0.05 / wu, params);
        worst_low = std::max(worst_low, rel(mean_exact(MeanKind::LowT_f0, t, w, low, params),
                                            mean_quadrature(MeanKind::LowT_f0, t, w, low, params, 1e-10)));
        for (auto k : {MeanKind::HighT_Gamma, MeanKind::HighT_B}) {
            worst_high = std::max(worst_high,
                                  rel(mean_exact(k, t, w, hot, params), mean_quadrature(k, t, w, hot, params, 1e-10)));
        }
    }
    auto r = make("closed_form_vs_quadrature", worst_low, tol, "<=");
    r.passed = r.passed && worst_high <= tol;
    r.metrics = {{"max_rel_err_lowT", worst_low}, {"max_rel_err_highT_kinds", worst_high}, {"samples", 50}};
    r.detail = "50 random (t, omega_L, omega_U, Omega); high-T kinds against their leading-order integrands";
    return r;
}

CheckResult check_fock(const ValidationOptions& o) {
    const double tol_g = threshold_or(o, 1e-6);
    const double tol_b = threshold_or(o, 1e-5);
    const ModelParams params;
    const double dX = 40.0;
    TruncationBudget budget;
    budget.max_trace_deficit = 1e-10;
    budget.max_dim = 400;
    double worst_g = 0.0, worst_b = 0.0, min_g = 1.0;
    const auto tw = logspace(0.05, 20.0, 20);
    for (std::size_t i = 0; i < tw.size(); ++i) {
        const double omega = 10.0 + 10.0 * static_cast<double>(i) / 19.0;
        const double t = 0.3 + 2.7 * static_cast<double>((i * 7) % 20) / 19.0;
        const double tau = tw[i] / omega;
        const auto tt = ThermalTime::from_tau(tau, params);
        const Oscillator osc{omega, 1.0, coupling_constant(params, 1.0)};
        const double g_formula = std::exp(-0.5 * dX * dX * f_gamma(t, osc, tt, params));
        const double b_formula = std::exp(-0.5 * dX * dX * f_b(t, osc, tt, params));
        const double g_oracle = std::abs(gamma_oracle(t, dX / 2, -dX / 2, osc, params, tt.temperature(), budget));
        const double b_oracle = overlap_oracle(t, dX / 2, -dX / 2, osc, params, tt.temperature(), budget);
        worst_g = std::max(worst_g, std::abs(g_formula - g_oracle));
        worst_b = std::max(worst_b, std::abs(b_formula - b_oracle));
        min_g = std::min(min_g, g_formula);
    }
    auto r = make("fock_oracle", worst_g, tol_g, "<=");
    r.passed = r.passed && worst_b <= tol_b;
    r.metrics = {{"max_abs_err_gamma", worst_g}, {"max_abs_err_overlap", worst_b},
                 {"overlap_threshold", tol_b}, {"min_gamma", min_g}};
    r.detail = "20 points, tau_T omega in [0.05, 20], dX = 40, budget 1e-10, dim <= 400";
    return r;
}

struct DecayFit {
    double c_gamma;
    double c_overlap;
};

// Fits -ln(indicator)/N against t^2 on t in [1e-4, 1e-2]/omega_U, returns the
// implied mean coefficients (2/dX^2) * slope.
DecayFit fit_decay(double T, std::uint64_t seed, std::size_t N) {
    const ModelParams params;
    const double dX = 10.0;
    EnvironmentSpec spec;
    spec.omega_L = kWindow.omega_L;
    spec.omega_U = kWindow.omega_U;
    spec.T = T;
    spec.n_unobserved = N;
    spec.n_observed_per_mac = N;
    spec.n_macrofractions = 1;
    spec.seed = seed;
    const auto env = sample_environment(spec, params);
    const auto tau = ThermalTime::from_temperature(T, params);
    const auto ts = logspace(1e-4 / kWindow.omega_U, 1e-2 / kWindow.omega_U, 30);
    std::vector<double> yg, yb;
    for (double t : ts) {
        yg.push_back(-std::log(gamma_factor(t, dX, env.unobserved, tau, params)) / static_cast<double>(N));
        yb.push_back(-std::log(overlap_factor(t, dX, env.observed[0], tau, params)) / static_cast<double>(N));
    }
    const double s = 2.0 / (dX * dX);
    return {s * fit_quadratic(ts, yg).coefficient, s * fit_quadratic(ts, yb).coefficient};
}

CheckResult check_short_time(const ValidationOptions& o) {
    const double tol = threshold_or(o, 0.05);
    const ModelParams params;
    const auto low = ThermalTime::from_temperature(0.0, params);
    const auto hot = ThermalTime::from_temperature(kHighT, params);
    const auto fl = fit_decay(0.0, o.seed, 10000);
    const auto fh = fit_decay(kHighT, o.seed, 10000);
    const double c_low = short_time_coefficient(MeanKind::LowT_f0, kWindow, low, params);
    const double c_g = short_time_coefficient(MeanKind::HighT_Gamma, kWindow, hot, params);
    const double c_b = short_time_coefficient(MeanKind::HighT_B, kWindow, hot, params);
    const double e1 = rel(fl.c_gamma, c_low), e2 = rel(fl.c_overlap, c_low);
    const double e3 = rel(fh.c_gamma, c_g), e4 = rel(fh.c_overlap, c_b);
    auto r = make("short_time_decay", std::max({e1, e2, e3, e4}), tol, "<=");
    r.metrics = {{"lowT_gamma_rel_dev", e1}, {"lowT_overlap_rel_dev", e2}, {"highT_gamma_rel_dev", e3},
                 {"highT_overlap_rel_dev", e4}, {"c2_lowT", c_low}, {"c2_highT_gamma", c_g},
                 {"c2_highT_overlap", c_b}};
    r.detail = "N = 1e4 sampled oscillators, fits of -ln(indicator)/N vs t^2";
    return r;
}

CheckResult check_temperature_scaling(const ValidationOptions& o) {
    const double tol = threshold_or(o, 0.1);
    const double dX = 10.0;
    const auto f1 = fit_decay(kHighT, o.seed, 10000);
    const auto f4 = fit_decay(4.0 * kHighT, o.seed, 10000);
    auto tau_of = [&](double c) { return std::sqrt(2.0 / (dX * dX * c)); };
    const double ratio_dec = tau_of(f1.c_gamma) / tau_of(f4.c_gamma);
    const double ratio_ort = tau_of(f4.c_overlap) / tau_of(f1.c_overlap);
    auto r = make("timescale_temperature_scaling", std::max(std::abs(ratio_dec - 2.0), std::abs(ratio_ort - 2.0)), tol,
                  "<=");
    r.metrics = {{"tau_dec(T)/tau_dec(4T)", ratio_dec}, {"tau_ort(4T)/tau_ort(T)", ratio_ort}};
    r.detail = "fitted timescales at T = 1e3 and 4e3 (high-T regime); expected factor 2";
    return r;
}

CheckResult check_plateau(const ValidationOptions& o) {
    const double tol = threshold_or(o, 0.02);
    const ModelParams params;
    const auto hot = ThermalTime::from_temperature(kHighT, params);
    double worst = 0.0;
    std::vector<std::pair<std::string, double>> metrics;
    for (const FrequencyWindow& w : {kWindow, FrequencyWindow{20.0, 35.0, 1.5}}) {
        const double t0 = 100.0 / w.omega_L;
        const double period = 2.0 * pi / w.Omega;
        for (auto k : {MeanKind::LowT_f0, MeanKind::HighT_Gamma, MeanKind::HighT_B}) {
            CompensatedSum acc;
            const int n = 640;
            for (int i = 0; i < n; ++i) acc += mean_exact(k, t0 + 10.0 * period * i / n, w, hot, params);
            const double avg = acc.value() / n;
            const double predicted = mean_prefactor(k, w, hot, params) * asymptote_constants(k, w).plateau_mean();
            const double e = rel(avg, predicted);
            worst = std::max(worst, e);
            metrics.emplace_back(std::string(to_string(k)) + "_rel_dev_wL" + format_double(w.omega_L), e);
        }
    }
    auto r = make("long_time_plateau", worst, tol, "<=");
    r.metrics = metrics;
    r.detail = "10-period average from t omega_L = 100 vs prefactor (A/2 + B)";
    return r;
}

CheckResult check_sbs_bound(const ValidationOptions& o) {
    const ModelParams params;
    int as_expected = 0;
    std::vector<std::pair<std::string, double>> metrics;
    struct Case {
        const char* label;
        double T;
        double dX;
    };
    for (const Case& c : {Case{"lowT", 0.0, 2.5}, Case{"highT", 200.0, 5.0}}) {
        const auto tau = ThermalTime::from_temperature(c.T, params);
        const auto regime = classify_regime(kWindow, tau, params);
        const auto bd = nmac_bound(*kind_for(regime, true), 1e-3, kWindow, tau, params);
        const auto bo = nmac_bound(*kind_for(regime, false), 1e-3, kWindow, tau, params);
        for (double scale : {2.0, 0.1}) {
            EnvironmentSpec spec;
            spec.omega_L = kWindow.omega_L;
            spec.omega_U = kWindow.omega_U;
            spec.T = c.T;
            spec.n_unobserved = static_cast<std::size_t>(std::max(1.0, std::ceil(scale * bd.n_mac(c.dX))));
            spec.n_observed_per_mac = static_cast<std::size_t>(std::max(1.0, std::ceil(scale * bo.n_mac(c.dX))));
            spec.n_macrofractions = 1;
            spec.seed = o.seed;
            const auto rep = sbs_verdict(spec, params, c.dX, 1e-3, 1e-3, {}, o.jobs);
            const bool expected = scale > 1.0 ? rep.pass : !rep.pass;
            as_expected += expected ? 1 : 0;
            const std::string tag = std::string(c.label) + (scale > 1.0 ? "_2x" : "_0.1x");
            metrics.emplace_back(tag + "_N_unobserved", static_cast<double>(spec.n_unobserved));
            metrics.emplace_back(tag + "_N_observed", static_cast<double>(spec.n_observed_per_mac));
            metrics.emplace_back(tag + "_avg_gamma", rep.avg_gamma);
            metrics.emplace_back(tag + "_avg_overlap", rep.avg_overlap.front());
        }
    }
    auto r = make("sbs_bound", as_expected, 4, ">=");
    r.metrics = metrics;
    r.detail = "eps = 1e-3; N_mac = 2x bound must pass, 0.1x bound must fail (lowT and highT)";
    return r;
}

CheckResult check_lln(const ValidationOptions& o) {
    const ModelParams params;
    const double t = 0.5;
    const std::size_t N = 10000;
    int worst = 50;
    std::vector<std::pair<std::string, double>> metrics;
    struct Case {
        const char* label;
        double T;
        bool overlap;
    };
    for (const Case& c : {Case{"lowT", 0.0, false}, Case{"highT_gamma", 200.0, false}, Case{"highT_overlap", 200.0, true}}) {
        const auto tau = ThermalTime::from_temperature(c.T, params);
        const MeanKind kind = c.T == 0.0 ? MeanKind::LowT_f0 : c.overlap ? MeanKind::HighT_B : MeanKind::HighT_Gamma;
        const double reference = mean_quadrature(kind, t, kWindow, tau, params, 1e-10, Integrand::Exact);
        const double C = coupling_constant(params, 1.0);
        int within = 0;
        for (int s = 0; s < 50; ++s) {
            const auto freqs =
                sample_frequencies(kWindow.omega_L, kWindow.omega_U, N, o.seed + 1000 + s, params.Omega);
            CompensatedSum sum, sum2;
            for (double w : freqs) {
                const Oscillator osc{w, 1.0, C};
                const double f = c.overlap ? f_b(t, osc, tau, params) : f_gamma(t, osc, tau, params);
                sum += f;
                sum2 += f * f;
            }
            const double mean = sum.value() / N;
            const double var = (sum2.value() / N - mean * mean) * N / (N - 1.0);
            const double se = std::sqrt(var / N);
            within += std::abs(mean - reference) <= 4.0 * se ? 1 : 0;
        }
        worst = std::min(worst, within);
        metrics.emplace_back(std::string(c.label) + "_within_4se", within);
    }
    auto r = make("lln_convergence", worst, 48, ">=");
    r.metrics = metrics;
    r.detail = "50 seeds x N = 1e4 at t = 0.5 against quadrature of the exact integrand";
    return r;
}

CheckResult check_special_functions(const ValidationOptions& o) {
    const double tol = threshold_or(o, 1e-13);
    const SiCiReference ref = o.sici_reference ? o.sici_reference : SiCiReference(quadrature_sici);
    std::vector<double> xs = logspace(1e-3, 1e3, 500);
    for (int i = 1; i <= 500; ++i) xs.push_back(2.0 * i);
    double err_si = 0.0, err_ci = 0.0;
    for (double x : xs) {
        const auto [s, c] = ref(x);
        err_si = std::max(err_si, std::abs(si(x) - s));
        err_ci = std::max(err_ci, std::abs(ci(x) - c));
    }
    // Expansion orders.
    const FrequencyWindow& w = kWindow;
    const auto ts = logspace(0.005 / w.omega_U, 0.1 / w.omega_U, 20);
    std::vector<double> e_si1, e_si2, e_ci1, e_ci2;
    for (double t : ts) {
        e_si1.push_back(f_si_short(patterns::PMPM, t, w) - f_si(patterns::PMPM, t, w));
        e_si2.push_back(f_si_short(patterns::PMMP, t, w) - f_si(patterns::PMMP, t, w));
        e_ci1.push_back(f_ci_short(patterns::PMPM, t, w) - f_ci(patterns::PMPM, t, w));
        e_ci2.push_back(f_ci_short(patterns::PMMP, t, w) - f_ci(patterns::PMMP, t, w));
    }
    const double s_si = std::min(loglog_slope(ts, e_si1), loglog_slope(ts, e_si2));
    const double s_ci = std::min(loglog_slope(ts, e_ci1), loglog_slope(ts, e_ci2));
    // Long time: envelope of the error over one period around each t.
    const auto tl = logspace(10.0 / (w.omega_L - w.Omega), 1e4 / (w.omega_L - w.Omega), 16);
    double s_long = -1e300;
    for (int which = 0; which < 4; ++which) {
        const SignPattern& p = which % 2 == 0 ? patterns::PMPM : patterns::PMMP;
        std::vector<double> env;
        for (double t : tl) {
            double m = 0.0;
            for (int j = 0; j < 32; ++j) {
                const double tj = t + j * (2.0 * pi / w.Omega) / 32.0;
                const double e = which < 2 ? f_si_long(p, tj, w) - f_si(p, tj, w) : f_ci_long(p, tj, w) - f_ci(p, tj, w);
                m = std::max(m, std::abs(e));
            }
            env.push_back(m);
        }
        s_long = std::max(s_long, loglog_slope(tl, env));
    }
    auto r = make("special_functions", std::max(err_si, err_ci), tol, "<=");
    r.passed = r.passed && s_si >= 4.5 && s_ci >= 3.5 && s_long <= -1.5;
    r.metrics = {{"max_abs_err_si", err_si}, {"max_abs_err_ci", err_ci}, {"slope_short_f_si", s_si},
                 {"slope_short_f_ci", s_ci}, {"slope_long_max", s_long}, {"points", static_cast<double>(xs.size())}};
    r.detail = std::string("reference: ") + (o.sici_reference ? "injected" : "adaptive quadrature") +
               "; slopes need >= 4.5 (f_si short), >= 3.5 (f_ci short), <= -1.5 (long)";
    return r;
}

CheckResult check_overlap_coefficient(const ValidationOptions& o) {
    const double tol = threshold_or(o, 0.01);
    const ModelParams params;
    const auto hot = ThermalTime::from_temperature(kHighT, params);
    // y(t) = mean/t^2 = c2 + d t^2 + ...; linear regression in t^2.
    const auto ts = logspace(1e-3 / kWindow.omega_U, 2e-2 / kWindow.omega_U, 12);
    std::vector<double> x, y;
    for (double t : ts) {
        x.push_back(t * t);
        y.push_back(mean_quadrature(MeanKind::HighT_B, t, kWindow, hot, params, 1e-12) / (t * t));
    }
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double c2 = my - slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - c2 - slope * x[i];
        rss += e * e;
    }
    const double s2 = rss / (n - 2.0);
    const double se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
    const auto printed = printed_overlap_coefficient(kWindow, hot, params);
    const double derived = 2.0 * params.M * params.gamma0_bar * hot.tau() / (params.hbar * pi);
    const double r_main = c2 / printed.tau_squared_form;
    const double r_app = c2 / printed.per_bandwidth_form;
    std::string match = "neither printed form";
    if (std::abs(r_main - 1.0) < 0.01) match = "tau_T^2 form";
    if (std::abs(r_app - 1.0) < 0.01) match = "1/dw form";
    std::ostringstream d;
    d << "fitted c2 = " << format_double(c2) << " +/- " << format_double(se) << "; matches " << match
      << "; equals 2 M gamma0_bar tau_T/(hbar pi) to " << format_double(rel(c2, derived))
      << " (the 1/dw form times dw; the tau_T^2 form has an extra factor tau_T and lacks 1/dw)";
    auto r = make("overlap_coefficient_resolution", se / std::abs(c2), tol, "<");
    r.metrics = {{"c2_fit", c2},
                 {"c2_fit_std_error", se},
                 {"c2_closed_form", short_time_coefficient(MeanKind::HighT_B, kWindow, hot, params)},
                 {"ratio_to_tau_squared_form", r_main},
                 {"ratio_to_per_bandwidth_form", r_app},
                 {"ratio_to_2Mg0tau_over_hbar_pi", c2 / derived}};
    r.detail = d.str();
    return r;
}

CheckResult check_printed_forms(const ValidationOptions& o) {
    const double tol = threshold_or(o, 1e-6);
    const ModelParams params;
    const auto hot = ThermalTime::from_temperature(kHighT, params);
    const FrequencyWindow& w = kWindow;
    // Decoherence normalization: quadrature vs closed bracket under both prefactors.
    const double t = 0.5;
    const double quad = mean_quadrature(MeanKind::HighT_Gamma, t, w, hot, params, 1e-12);
    const double with_dw = mean_exact(MeanKind::HighT_Gamma, t, w, hot, params);
    const double ratio = mean_prefactor(MeanKind::HighT_Gamma, w, hot, params, PrefactorConvention::PrintedHighTGamma) /
                         mean_prefactor(MeanKind::HighT_Gamma, w, hot, params);
    const double with_printed = with_dw * ratio;
    // High-T decoherence plateau: printed vs derived constants against a time average.
    const double t0 = 100.0 / w.omega_L;
    const double period = 2.0 * pi / w.Omega;
    CompensatedSum acc;
    for (int i = 0; i < 640; ++i) {
        acc += mean_quadrature(MeanKind::HighT_Gamma, t0 + 10.0 * period * i / 640, w, hot, params, 1e-10);
    }
    const double avg = acc.value() / 640.0;
    const double P = mean_prefactor(MeanKind::HighT_Gamma, w, hot, params);
    const auto derived = asymptote_constants(MeanKind::HighT_Gamma, w);
    const auto printed = asymptote_constants_printed(MeanKind::HighT_Gamma, w);
    const double e_dw = rel(with_dw, quad);
    auto r = make("printed_form_discrepancies", e_dw, tol, "<=");
    r.metrics = {{"highT_gamma_rel_err_dw_prefactor", e_dw},
                 {"highT_gamma_rel_err_printed_prefactor", rel(with_printed, quad)},
                 {"plateau_rel_dev_derived_constants", rel(P * derived.plateau_mean(), avg)},
                 {"plateau_rel_dev_printed_constants", rel(P * printed.plateau_mean(), avg)},
                 {"A_Gamma_derived", derived.A},
                 {"B_Gamma_derived", derived.B},
                 {"A_Gamma_printed", printed.A},
                 {"B_Gamma_printed", printed.B}};
    r.detail = "high-T decoherence mean normalizes by 1/dw; plateau constants are compared with a 10-period average";
    return r;
}

}  // namespace

const std::vector<CheckInfo>& validation_checks() {
    static const std::vector<CheckInfo> checks = {
        {"closed_form_vs_quadrature", "closed-form means vs adaptive quadrature", check_closed_form},
        {"fock_oracle", "per-oscillator |Gamma| and B vs truncated Fock space", check_fock},
        {"short_time_decay", "Gaussian decay coefficient from sampled environments", check_short_time},
        {"timescale_temperature_scaling", "tau_dec and tau_ort under T -> 4T", check_temperature_scaling},
        {"long_time_plateau", "time-averaged means vs plateau constants", check_plateau},
        {"sbs_bound", "N_mac bounds certify indicator suppression", check_sbs_bound},
        {"lln_convergence", "sample means vs quadrature over 50 seeds", check_lln},
        {"special_functions", "Si/Ci accuracy and expansion orders", check_special_functions},
        {"overlap_coefficient_resolution", "high-T overlap short-time coefficient", check_overlap_coefficient},
        {"printed_form_discrepancies", "high-T decoherence prefactor and plateau constants", check_printed_forms},
    };
    return checks;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const ValidationOptions& options) {
    const auto& all = validation_checks();
    for (const auto& n : names) {
        if (std::none_of(all.begin(), all.end(), [&](const CheckInfo& c) { return c.name == n; })) {
            throw ConfigError("unknown check '" + n + "'");
        }
    }
    std::vector<CheckResult> out;
    for (const auto& c : all) {
        if (!names.empty() && std::find(names.begin(), names.end(), c.name) == names.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = c.run(options);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_check_line(const CheckResult& r) {
    std::ostringstream s;
    s << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << format_double(r.measured) << ' '
      << r.comparison << ' ' << format_double(r.threshold) << "  (" << std::fixed;
    s.precision(2);
    s << r.seconds << " s)";
    return s.str();
}

}  // namespace qbm
