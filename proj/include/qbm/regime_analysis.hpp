// regime_analysis.hpp: Decay timescales, macrofraction-size bounds and the SBS verdict

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbm/core_params.hpp"
#include "qbm/ensemble_means.hpp"
#include "qbm/indicators.hpp"

namespace qbm {

struct Timescales {
    MeanKind kind{MeanKind::LowT_f0};
    double c2{0.0};
    // sqrt(2 / (dX^2 c2)): indicator ~ exp[-N_mac (t / tau_derived)^2]
    double tau_derived{0.0};
    // tau_0, tau_dec or tau_ort as printed (first power of dX, no square root)
    double tau_paper{0.0};
};

struct MacBound {
    MeanKind kind{MeanKind::LowT_f0};
    double epsilon{0.0};
    double plateau_min{0.0};  // min over cos^2 of A cos^2 + B
    double bound_exact{0.0};  // minimal dX^2 N_mac
    double bound_fast{0.0};   // printed fast-environment approximation of the same product

    // N_mac for a given separation; +inf if dX == 0 and the bound is positive.
    double n_mac(double delta_X) const;
};

struct TemperatureConstraint {
    bool satisfied{false};
    double lhs{0.0};  // T / (dX sqrt(N_mac))
    double rhs{0.0};  // M gamma0_bar / (2 pi kB omega_U)
};

// Uniform averaging grid over whole periods of the central oscillator.
struct AveragingWindow {
    double t_start{0.0};  // raised to the long-time guard if smaller
    std::size_t periods{10};
    std::size_t points_per_period{64};

    std::vector<double> grid(const FrequencyWindow& w, const ExpansionGuards& guards = {}) const;
};

struct RegimeReport {
    TemperatureRegime regime{TemperatureRegime::LowT};
    bool fast_environment{false};
    double temperature{0.0};
    double tau_T{0.0};
    double delta_X{0.0};
    double epsilon_dec{0.0};
    double epsilon_ort{0.0};
    std::vector<Timescales> timescales;
    std::optional<MacBound> bound_dec;
    std::optional<MacBound> bound_ort;
    std::optional<TemperatureConstraint> constraint_unobserved;
    std::optional<TemperatureConstraint> constraint_observed;
    std::optional<double> macrofraction_ratio;
    double window_start{0.0};
    double window_end{0.0};
    double avg_gamma{1.0};
    std::vector<double> avg_overlap;
    bool pass{false};
};

// Kind appropriate to (regime, indicator); none for Intermediate.
std::optional<MeanKind> kind_for(TemperatureRegime regime, bool decoherence);

TemperatureRegime classify_regime(const FrequencyWindow& w, const ThermalTime& tau, const ModelParams& params,
                                  double factor = kRegimeFactor);

// Throws DomainError when kind does not belong to the regime of (w, tau), unless enforce is false.
Timescales gaussian_timescale(MeanKind kind, double delta_X, const FrequencyWindow& w, const ThermalTime& tau,
                              const ModelParams& params, bool enforce_regime = true);

// epsilon in (0, 1]; epsilon = 1 gives a zero bound.
MacBound nmac_bound(MeanKind kind, double epsilon, const FrequencyWindow& w, const ThermalTime& tau,
                    const ModelParams& params);

TemperatureConstraint temperature_constraint(double delta_X, double n_mac, const FrequencyWindow& w,
                                             const ModelParams& params, double T);

// Lower bound on N^B_mac / N^Gamma_mac: 2 (kB T / hbar Omega)^2 ln(eps_ort) / ln(eps_dec).
double macrofraction_ratio(double T, const ModelParams& params, double eps_dec, double eps_ort);

// Samples the environment, averages |Gamma| (unobserved) and B (each observed
// macrofraction) over the window and assembles the report.
RegimeReport sbs_verdict(const EnvironmentSpec& spec, const ModelParams& params, double delta_X, double eps_dec,
                         double eps_ort, const AveragingWindow& window = {}, std::size_t jobs = 1);

// Least squares y = c t^2 through the origin, with the standard error of c.
struct QuadraticFit {
    double coefficient{0.0};
    double std_error{0.0};
};
QuadraticFit fit_quadratic(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace qbm
