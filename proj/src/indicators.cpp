// indicators.cpp: alpha_k(t), f^Gamma, f^B, environment sampling, macrofraction indicators

#include "qbm/indicators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qbm/errors.hpp"
#include "qbm/parallel.hpp"
#include "qbm/summation.hpp"

namespace qbm {

namespace {

// (e^{ixt} - 1)/x written as 2i sin(xt/2) e^{ixt/2} / x.
std::complex<double> expm1_over(double x, double t) {
    const double h = 0.5 * x * t;
    return std::complex<double>(0.0, 2.0 * std::sin(h) / x) * std::polar(1.0, h);
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

template <class F>
double sum_over(const Macrofraction& mac, F&& f) {
    CompensatedSum acc;
    for (const auto& osc : mac.oscillators) acc += f(osc);
    return acc.value();
}

}  // namespace

std::complex<double> alpha(double t, const Oscillator& osc, const ModelParams& params) {
    if (!(t >= 0.0)) throw DomainError("alpha: t must be >= 0");
    const double W = params.Omega;
    if (std::abs(osc.omega - W) <= kResonanceGuard * W) {
        throw DomainError("alpha: resonant oscillator (omega == Omega)");
    }
    const std::complex<double> S = expm1_over(osc.omega + W, t) + expm1_over(osc.omega - W, t);
    const double pref = -osc.C / (2.0 * std::sqrt(2.0 * params.hbar * osc.m * osc.omega));
    return pref * S;
}

double alpha_abs2(double t, const Oscillator& osc, const ModelParams& params) {
    return std::norm(alpha(t, osc, params));
}

double f_gamma(double t, const Oscillator& osc, const ThermalTime& tau, const ModelParams& params) {
    return alpha_abs2(t, osc, params) * tau.coth_factor(osc.omega);
}

double f_b(double t, const Oscillator& osc, const ThermalTime& tau, const ModelParams& params) {
    return alpha_abs2(t, osc, params) * tau.tanh_factor(osc.omega);
}

std::vector<double> sample_frequencies(double omega_L, double omega_U, std::size_t n, std::uint64_t seed,
                                       double Omega) {
    std::mt19937_64 gen(seed);
    std::vector<double> out;
    out.reserve(n);
    const double width = omega_U - omega_L;
    while (out.size() < n) {
        const double w = omega_L + width * uniform01(gen);
        if (std::abs(w - Omega) <= kResonanceGuard * Omega) continue;
        out.push_back(w);
    }
    return out;
}

Environment sample_environment(const EnvironmentSpec& spec, const ModelParams& params) {
    spec.validate();
    params.validate();
    if (!(spec.omega_L > params.Omega)) {
        throw ConfigError("sample_environment: env.omega_L must exceed model.Omega (off-resonance)");
    }
    const std::size_t total = spec.n_unobserved + spec.n_observed_per_mac * spec.n_macrofractions;
    const auto freqs = sample_frequencies(spec.omega_L, spec.omega_U, total, spec.seed, params.Omega);
    const double C = coupling_constant(params, spec.m);

    Environment env;
    std::size_t next = 0;
    auto fill = [&](Macrofraction& mac, std::size_t count) {
        mac.oscillators.reserve(count);
        for (std::size_t i = 0; i < count; ++i) mac.oscillators.push_back({freqs[next++], spec.m, C});
    };
    fill(env.unobserved, spec.n_unobserved);
    env.observed.resize(spec.n_macrofractions);
    for (std::size_t j = 0; j < spec.n_macrofractions; ++j) {
        env.observed[j].label = static_cast<int>(j + 1);
        fill(env.observed[j], spec.n_observed_per_mac);
    }
    return env;
}

double sum_f_gamma(double t, const Macrofraction& mac, const ThermalTime& tau, const ModelParams& params) {
    return sum_over(mac, [&](const Oscillator& o) { return f_gamma(t, o, tau, params); });
}

double sum_f_b(double t, const Macrofraction& mac, const ThermalTime& tau, const ModelParams& params) {
    return sum_over(mac, [&](const Oscillator& o) { return f_b(t, o, tau, params); });
}

double gamma_factor(double t, double delta_X, const Macrofraction& mac, const ThermalTime& tau,
                    const ModelParams& params) {
    if (delta_X == 0.0) return 1.0;
    return std::exp(-0.5 * delta_X * delta_X * sum_f_gamma(t, mac, tau, params));
}

double overlap_factor(double t, double delta_X, const Macrofraction& mac, const ThermalTime& tau,
                      const ModelParams& params) {
    if (delta_X == 0.0) return 1.0;
    return std::exp(-0.5 * delta_X * delta_X * sum_f_b(t, mac, tau, params));
}

IndicatorSeries indicator_series(const std::vector<double>& times, double delta_X, const Environment& env,
                                 const ThermalTime& tau, const ModelParams& params, std::size_t jobs) {
    if (times.empty()) throw ConfigError("indicator_series: empty time grid");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) throw ConfigError("indicator_series: time grid must be strictly increasing");
    }
    if (!(delta_X >= 0.0)) throw ConfigError("indicator_series: delta_X must be >= 0");

    IndicatorSeries out;
    out.times = times;
    out.delta_X = delta_X;
    out.gamma_abs.resize(times.size());
    out.overlap.assign(env.observed.size(), std::vector<double>(times.size()));
    parallel_for(times.size(), jobs, [&](std::size_t i) {
        out.gamma_abs[i] = gamma_factor(times[i], delta_X, env.unobserved, tau, params);
        for (std::size_t j = 0; j < env.observed.size(); ++j) {
            out.overlap[j][i] = overlap_factor(times[i], delta_X, env.observed[j], tau, params);
        }
    });
    return out;
}

}  // namespace qbm
