// core_params.cpp: Validation, thermal time and regime classification

#include "qbm/core_params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qbm/errors.hpp"

namespace qbm {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(std::string(name) + " must be finite and > 0");
    }
}

}  // namespace

void ModelParams::validate() const {
    require_positive(M, "model.M");
    require_positive(Omega, "model.Omega");
    require_positive(gamma0_bar, "model.gamma0_bar");
    require_positive(hbar, "model.hbar");
    require_positive(kB, "model.kB");
}

void EnvironmentSpec::validate() const {
    require_positive(omega_L, "env.omega_L");
    require_positive(omega_U, "env.omega_U");
    if (!(omega_L < omega_U)) {
        throw ConfigError("env.omega_L must be < env.omega_U");
    }
    require_positive(m, "env.m");
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw ConfigError("env.T must be finite and >= 0");
    }
    if (n_unobserved == 0 || n_observed_per_mac == 0 || n_macrofractions == 0) {
        throw ConfigError("env oscillator counts must all be >= 1");
    }
}

bool EnvironmentSpec::is_fast(const ModelParams& params, double factor) const noexcept {
    return omega_L >= factor * params.Omega;
}

ThermalTime ThermalTime::from_temperature(double T, const ModelParams& params) {
    if (!(T >= 0.0) || std::isnan(T)) {
        throw DomainError("temperature must be >= 0");
    }
    if (T == 0.0) {
        return ThermalTime(0.0, std::numeric_limits<double>::infinity());
    }
    return ThermalTime(T, params.hbar / (2.0 * params.kB * T));
}

ThermalTime ThermalTime::from_tau(double tau, const ModelParams& params) {
    if (!(tau > 0.0)) {
        throw DomainError("thermal time must be > 0");
    }
    if (std::isinf(tau)) {
        return ThermalTime(0.0, tau);
    }
    return ThermalTime(params.hbar / (2.0 * params.kB * tau), tau);
}

double ThermalTime::coth_factor(double omega) const {
    if (zero_temperature()) return 1.0;
    return 1.0 / std::tanh(tau_ * omega);
}

double ThermalTime::tanh_factor(double omega) const {
    if (zero_temperature()) return 1.0;
    return std::tanh(tau_ * omega);
}

std::string_view to_string(TemperatureRegime regime) noexcept {
    switch (regime) {
        case TemperatureRegime::LowT: return "LowT";
        case TemperatureRegime::HighT: return "HighT";
        case TemperatureRegime::Intermediate: return "Intermediate";
    }
    return "Intermediate";
}

double coupling_constant(const ModelParams& params, double m) {
    if (!(params.M > 0.0) || !(m > 0.0) || !(params.gamma0_bar > 0.0)) {
        throw DomainError("coupling_constant: masses and gamma0_bar must be > 0");
    }
    return 2.0 * std::sqrt(params.M * m * params.gamma0_bar / std::numbers::pi);
}

TemperatureRegime classify_regime(const EnvironmentSpec& spec, const ModelParams& params,
                                  double factor) {
    const double thermal = params.kB * spec.T;
    if (thermal <= params.hbar * spec.omega_L / factor) return TemperatureRegime::LowT;
    if (thermal >= factor * params.hbar * spec.omega_U) return TemperatureRegime::HighT;
    return TemperatureRegime::Intermediate;
}

}  // namespace qbm
