// regime_analysis.cpp: Timescales, N_mac bounds, temperature constraint, SBS verdict

#include "qbm/regime_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qbm/errors.hpp"
#include "qbm/parallel.hpp"
#include "qbm/summation.hpp"

namespace qbm {

namespace {

using std::numbers::pi;

double log_inverse(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
    return -std::log(epsilon);
}

double average(const std::vector<double>& v) {
    CompensatedSum acc;
    for (double x : v) acc += x;
    return acc.value() / static_cast<double>(v.size());
}

}  // namespace

double MacBound::n_mac(double delta_X) const {
    if (delta_X == 0.0) return bound_exact > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return bound_exact / (delta_X * delta_X);
}

std::vector<double> AveragingWindow::grid(const FrequencyWindow& w, const ExpansionGuards& guards) const {
    if (periods == 0 || points_per_period == 0) throw ConfigError("averaging window needs >= 1 period and point");
    const double t0 = std::max(t_start, guards.long_min / (w.omega_L - w.Omega));
    const double period = 2.0 * pi / w.Omega;
    const std::size_t n = periods * points_per_period;
    const double dt = period / static_cast<double>(points_per_period);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = t0 + dt * static_cast<double>(i);
    return out;
}

std::optional<MeanKind> kind_for(TemperatureRegime regime, bool decoherence) {
    switch (regime) {
        case TemperatureRegime::LowT: return MeanKind::LowT_f0;
        case TemperatureRegime::HighT: return decoherence ? MeanKind::HighT_Gamma : MeanKind::HighT_B;
        case TemperatureRegime::Intermediate: return std::nullopt;
    }
    return std::nullopt;
}

TemperatureRegime classify_regime(const FrequencyWindow& w, const ThermalTime& tau, const ModelParams& params,
                                  double factor) {
    const double kT = params.kB * tau.temperature();
    if (kT <= params.hbar * w.omega_L / factor) return TemperatureRegime::LowT;
    if (kT >= factor * params.hbar * w.omega_U) return TemperatureRegime::HighT;
    return TemperatureRegime::Intermediate;
}

Timescales gaussian_timescale(MeanKind kind, double delta_X, const FrequencyWindow& w, const ThermalTime& tau,
                              const ModelParams& params, bool enforce_regime) {
    if (!(delta_X > 0.0)) throw DomainError("gaussian_timescale: delta_X must be > 0");
    if (enforce_regime) {
        const auto regime = classify_regime(w, tau, params);
        const bool ok = (kind == MeanKind::LowT_f0) == (regime == TemperatureRegime::LowT) &&
                        regime != TemperatureRegime::Intermediate;
        if (!ok) {
            throw DomainError("gaussian_timescale: kind " + std::string(to_string(kind)) +
                              " does not match regime " + std::string(to_string(regime)));
        }
    }
    Timescales out;
    out.kind = kind;
    out.c2 = short_time_coefficient(kind, w, tau, params);
    out.tau_derived = std::sqrt(2.0 / (delta_X * delta_X * out.c2));
    const double base = params.hbar * pi / (delta_X * params.M * params.gamma0_bar);
    switch (kind) {
        case MeanKind::LowT_f0:
            out.tau_paper = base * w.delta_omega() / std::log(1.0 + w.delta_omega() / w.omega_L);
            break;
        case MeanKind::HighT_Gamma: out.tau_paper = tau.tau() * base * w.omega_L * w.omega_U; break;
        case MeanKind::HighT_B: out.tau_paper = base / tau.tau(); break;
    }
    return out;
}

MacBound nmac_bound(MeanKind kind, double epsilon, const FrequencyWindow& w, const ThermalTime& tau,
                    const ModelParams& params) {
    const double lg = log_inverse(epsilon);
    MacBound out;
    out.kind = kind;
    out.epsilon = epsilon;
    out.plateau_min = asymptote_constants(kind, w).plateau_min();
    if (!(out.plateau_min > 0.0)) throw NumericalError("nmac_bound: non-positive plateau");
    out.bound_exact = 2.0 * lg / (mean_prefactor(kind, w, tau, params) * out.plateau_min);
    const double Mg = params.M * params.gamma0_bar;
    const double wl = w.omega_L, wu = w.omega_U;
    switch (kind) {
        case MeanKind::LowT_f0: out.bound_fast = params.hbar * pi * wu * wu * wl * wl / (Mg * (wu + wl)) * lg; break;
        case MeanKind::HighT_Gamma:
            out.bound_fast = params.hbar * params.hbar * pi * w.Omega * w.Omega * wu * wl /
                             (Mg * params.kB * tau.temperature()) * lg;
            break;
        case MeanKind::HighT_B: out.bound_fast = 2.0 * pi * params.kB * wu * wl * tau.temperature() / Mg * lg; break;
    }
    return out;
}

TemperatureConstraint temperature_constraint(double delta_X, double n_mac, const FrequencyWindow& w,
                                             const ModelParams& params, double T) {
    if (!(delta_X > 0.0 && n_mac > 0.0 && T >= 0.0)) {
        throw DomainError("temperature_constraint: requires delta_X > 0, n_mac > 0, T >= 0");
    }
    TemperatureConstraint out;
    out.lhs = T / (delta_X * std::sqrt(n_mac));
    out.rhs = params.M * params.gamma0_bar / (2.0 * pi * params.kB * w.omega_U);
    out.satisfied = out.lhs < out.rhs;
    return out;
}

double macrofraction_ratio(double T, const ModelParams& params, double eps_dec, double eps_ort) {
    if (!(eps_dec > 0.0 && eps_dec < 1.0 && eps_ort > 0.0 && eps_ort < 1.0)) {
        throw DomainError("macrofraction_ratio: epsilons must lie in (0, 1)");
    }
    const double r = params.kB * T / (params.hbar * params.Omega);
    return 2.0 * r * r * std::log(eps_ort) / std::log(eps_dec);
}

RegimeReport sbs_verdict(const EnvironmentSpec& spec, const ModelParams& params, double delta_X, double eps_dec,
                         double eps_ort, const AveragingWindow& window, std::size_t jobs) {
    spec.validate();
    params.validate();
    if (!(delta_X >= 0.0)) throw ConfigError("sbs_verdict: delta_X must be >= 0");
    log_inverse(eps_dec);
    log_inverse(eps_ort);
    const FrequencyWindow w{spec.omega_L, spec.omega_U, params.Omega};
    w.validate();
    const auto tau = ThermalTime::from_temperature(spec.T, params);

    RegimeReport r;
    r.regime = classify_regime(w, tau, params);
    r.fast_environment = spec.is_fast(params);
    r.temperature = spec.T;
    r.tau_T = tau.tau();
    r.delta_X = delta_X;
    r.epsilon_dec = eps_dec;
    r.epsilon_ort = eps_ort;

    const auto kd = kind_for(r.regime, true);
    const auto ko = kind_for(r.regime, false);
    if (kd && ko) {
        if (delta_X > 0.0) {
            r.timescales.push_back(gaussian_timescale(*kd, delta_X, w, tau, params));
            if (*ko != *kd) r.timescales.push_back(gaussian_timescale(*ko, delta_X, w, tau, params));
        }
        r.bound_dec = nmac_bound(*kd, eps_dec, w, tau, params);
        r.bound_ort = nmac_bound(*ko, eps_ort, w, tau, params);
    }
    if (r.regime == TemperatureRegime::HighT) {
        if (delta_X > 0.0) {
            r.constraint_unobserved =
                temperature_constraint(delta_X, static_cast<double>(spec.n_unobserved), w, params, spec.T);
            r.constraint_observed =
                temperature_constraint(delta_X, static_cast<double>(spec.n_observed_per_mac), w, params, spec.T);
        }
        if (eps_dec < 1.0 && eps_ort < 1.0) r.macrofraction_ratio = macrofraction_ratio(spec.T, params, eps_dec, eps_ort);
    }

    const Environment env = sample_environment(spec, params);
    const auto grid = window.grid(w);
    r.window_start = grid.front();
    r.window_end = grid.back();
    const auto series = indicator_series(grid, delta_X, env, tau, params, jobs);
    r.avg_gamma = average(series.gamma_abs);
    r.avg_overlap.reserve(series.overlap.size());
    bool all_small = r.avg_gamma < eps_dec;
    for (const auto& ov : series.overlap) {
        r.avg_overlap.push_back(average(ov));
        all_small = all_small && r.avg_overlap.back() < eps_ort;
    }
    r.pass = all_small;
    return r;
}

QuadraticFit fit_quadratic(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.size() < 2) throw DomainError("fit_quadratic: need >= 2 matching points");
    CompensatedSum sty, st4;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double t2 = t[i] * t[i];
        sty += t2 * y[i];
        st4 += t2 * t2;
    }
    QuadraticFit fit;
    fit.coefficient = sty.value() / st4.value();
    CompensatedSum rss;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = y[i] - fit.coefficient * t[i] * t[i];
        rss += r * r;
    }
    fit.std_error = std::sqrt(rss.value() / static_cast<double>(t.size() - 1) / st4.value());
    return fit;
}

}  // namespace qbm
