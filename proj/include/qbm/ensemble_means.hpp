// ensemble_means.hpp: Uniform-bath averages <<f>> of the indicator exponents
//
// <<f>>(t) = (1/dw) int_{omega_L}^{omega_U} f(t; omega) d omega, with
//   LowT_f0      f = |alpha|^2                    (coth = tanh = 1)
//   HighT_Gamma  f = |alpha|^2 / (tau_T omega)    (leading order of coth)
//   HighT_B      f = |alpha|^2 tau_T omega        (leading order of tanh)
// Closed forms are assembled from F_Si / F_Ci; adaptive quadrature is the oracle.

#pragma once

#include <functional>
#include <string_view>

#include "qbm/core_params.hpp"
#include "qbm/special_functions.hpp"

namespace qbm {

enum class MeanKind { LowT_f0, HighT_Gamma, HighT_B };

std::string_view to_string(MeanKind kind) noexcept;
// Accepts "lowt", "low", "lowt_f0", "hight_gamma", "gamma", "hight_b", "b" (case-insensitive).
MeanKind parse_mean_kind(std::string_view text);

// Which integrand mean_quadrature averages.
enum class Integrand {
    LeadingOrder,  // the approximated f of the selected kind
    Exact,         // |alpha|^2 coth (LowT_f0, HighT_Gamma) or |alpha|^2 tanh (HighT_B)
};

// Long-time form prefactor * (A cos^2(Omega t) + B).
struct AsymptoteConstants {
    double A{0.0};
    double B{0.0};

    // Minimum over cos^2 in [0, 1].
    double plateau_min() const noexcept { return A >= 0.0 ? B : A + B; }
    // Time average, cos^2 -> 1/2.
    double plateau_mean() const noexcept { return 0.5 * A + B; }
};

// High-T decoherence prefactor conventions. The integral display of the
// high-T decoherence mean carries 1/(omega_L omega_U) where 1/dw belongs.
enum class PrefactorConvention { Corrected, PrintedHighTGamma };

// 2 M gamma0_bar / (hbar pi dw), times 1, 1/tau_T, tau_T for the three kinds.
double mean_prefactor(MeanKind kind, const FrequencyWindow& w, const ThermalTime& tau, const ModelParams& params,
                      PrefactorConvention convention = PrefactorConvention::Corrected);

// Closed form, t > 0. For t (omega_U + Omega) <= kMeanSeriesBranch a Taylor
// series of the same integrand is used; the closed form loses ~ (omega_U t)^-2
// relative digits to cancellation there.
inline constexpr double kMeanSeriesBranch = 1.0;
double mean_exact(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                  const ModelParams& params);

// Closed form without the small-t series branch (for diagnostics).
double mean_closed_form(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                        const ModelParams& params);

double mean_quadrature(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                       const ModelParams& params, double tol = 1e-10,
                       Integrand integrand = Integrand::LeadingOrder);

// (1/dw) int f over [omega_L, omega_U].
double uniform_mean(const std::function<double(double)>& f, double omega_L, double omega_U, double tol = 1e-12,
                    std::size_t initial_intervals = 1);

// Coefficient c2 in <<f>> ~ c2 t^2 as t -> 0.
double short_time_coefficient(MeanKind kind, const FrequencyWindow& w, const ThermalTime& tau,
                              const ModelParams& params);

// The two printed forms of the high-T overlap short-time coefficient.
struct PrintedOverlapCoefficient {
    double tau_squared_form{0.0};  // 2 M gamma0_bar tau_T^2 / (hbar pi)
    double per_bandwidth_form{0.0};  // 2 M gamma0_bar tau_T / (hbar pi dw)
};
PrintedOverlapCoefficient printed_overlap_coefficient(const FrequencyWindow& w, const ThermalTime& tau,
                                                      const ModelParams& params);

// c2 t^2; requires guards.short_ok(t).
double mean_short_time(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                       const ModelParams& params, const ExpansionGuards& guards = {});

AsymptoteConstants asymptote_constants(MeanKind kind, const FrequencyWindow& w);

// Constants exactly as printed. They agree with asymptote_constants except for
// HighT_Gamma, whose printed (A, B) differ from the true plateau.
AsymptoteConstants asymptote_constants_printed(MeanKind kind, const FrequencyWindow& w);

// prefactor * (A cos^2(Omega t) + B); requires guards.long_ok(t).
double mean_long_time(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                      const ModelParams& params, const ExpansionGuards& guards = {});

}  // namespace qbm
