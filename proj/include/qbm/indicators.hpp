// indicators.hpp: Per-oscillator displacement amplitudes and macrofraction indicators
//
// For a bath mode driven by the central oscillator, alpha(t) is the displacement
// amplitude per unit branch position. The decoherence factor |Gamma| and the
// generalized overlap B of a macrofraction are
//   |Gamma| = exp[-(dX^2/2) sum_k |alpha_k|^2 coth(tau_T omega_k)]
//   B       = exp[-(dX^2/2) sum_k |alpha_k|^2 tanh(tau_T omega_k)]

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qbm/core_params.hpp"

namespace qbm {

struct Oscillator {
    double omega{0.0};
    double m{1.0};
    double C{0.0};
};

struct Macrofraction {
    static constexpr int kUnobserved = -1;

    std::vector<Oscillator> oscillators;
    int label{kUnobserved};  // kUnobserved, or 1-based index of an observed macrofraction

    bool observed() const noexcept { return label != kUnobserved; }
};

struct Environment {
    Macrofraction unobserved;
    std::vector<Macrofraction> observed;
};

struct IndicatorSeries {
    std::vector<double> times;
    std::vector<double> gamma_abs;
    std::vector<std::vector<double>> overlap;  // overlap[j][i]: macrofraction j at times[i]
    EnvironmentSpec spec;
    double delta_X{0.0};
};

// Draws below this relative distance from Omega are rejected as resonant.
inline constexpr double kResonanceGuard = 1e-9;

std::complex<double> alpha(double t, const Oscillator& osc, const ModelParams& params);

// |alpha|^2 evaluated without the cancellation in e^{ixt} - 1 at small t.
double alpha_abs2(double t, const Oscillator& osc, const ModelParams& params);

double f_gamma(double t, const Oscillator& osc, const ThermalTime& tau, const ModelParams& params);
double f_b(double t, const Oscillator& osc, const ThermalTime& tau, const ModelParams& params);

// Deterministic in spec.seed. Unobserved oscillators are drawn first, then each
// observed macrofraction in order.
Environment sample_environment(const EnvironmentSpec& spec, const ModelParams& params);

// Uniform draws on [omega_L, omega_U] from the same generator sample_environment uses.
std::vector<double> sample_frequencies(double omega_L, double omega_U, std::size_t n, std::uint64_t seed,
                                       double Omega);

// sum_k f over a macrofraction (compensated).
double sum_f_gamma(double t, const Macrofraction& mac, const ThermalTime& tau, const ModelParams& params);
double sum_f_b(double t, const Macrofraction& mac, const ThermalTime& tau, const ModelParams& params);

double gamma_factor(double t, double delta_X, const Macrofraction& mac, const ThermalTime& tau,
                    const ModelParams& params);
double overlap_factor(double t, double delta_X, const Macrofraction& mac, const ThermalTime& tau,
                      const ModelParams& params);

// Evaluates gamma_factor on env.unobserved and overlap_factor on every observed
// macrofraction. jobs > 1 splits the grid across threads; output order is fixed.
IndicatorSeries indicator_series(const std::vector<double>& times, double delta_X, const Environment& env,
                                 const ThermalTime& tau, const ModelParams& params, std::size_t jobs = 1);

}  // namespace qbm
