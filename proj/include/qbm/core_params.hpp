// core_params.hpp: Model constants, bath ensemble description, thermal time, regimes

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

namespace qbm {

// Factor used to turn "much less than" / "much greater than" into testable thresholds.
inline constexpr double kRegimeFactor = 10.0;

// Central oscillator and unit constants. Natural units (hbar = kB = 1) by default.
struct ModelParams {
    double M{1.0};           // central mass
    double Omega{1.0};       // renormalized central frequency
    double gamma0_bar{1.0};  // coupling scale
    double hbar{1.0};
    double kB{1.0};

    void validate() const;
};

// Random uniform-frequency bath and its partition into macrofractions.
struct EnvironmentSpec {
    double omega_L{10.0};
    double omega_U{20.0};
    double m{1.0};  // common bath-oscillator mass
    double T{0.0};
    std::size_t n_unobserved{1};
    std::size_t n_observed_per_mac{1};
    std::size_t n_macrofractions{1};
    std::uint64_t seed{0};

    void validate() const;

    // omega_L >= factor * Omega
    bool is_fast(const ModelParams& params, double factor = kRegimeFactor) const noexcept;
};

// tau_T = hbar / (2 kB T). At T = 0 the value is +inf and only the limits
// coth -> 1, tanh -> 1 are ever taken from it.
class ThermalTime {
public:
    static ThermalTime from_temperature(double T, const ModelParams& params);
    static ThermalTime from_tau(double tau, const ModelParams& params);

    double temperature() const noexcept { return T_; }
    double tau() const noexcept { return tau_; }
    bool zero_temperature() const noexcept { return T_ == 0.0; }

    // coth(tau_T * omega), energy factor <E>/E0 of a thermal mode
    double coth_factor(double omega) const;
    // tanh(tau_T * omega), purity of a thermal mode
    double tanh_factor(double omega) const;

private:
    ThermalTime(double T, double tau) : T_(T), tau_(tau) {}

    double T_;
    double tau_;
};

enum class TemperatureRegime { LowT, HighT, Intermediate };

std::string_view to_string(TemperatureRegime regime) noexcept;

// C = 2 sqrt(M m gamma0_bar / pi)
double coupling_constant(const ModelParams& params, double m);

// LowT iff kB T <= hbar omega_L / factor, HighT iff kB T >= factor hbar omega_U.
TemperatureRegime classify_regime(const EnvironmentSpec& spec, const ModelParams& params,
                                  double factor = kRegimeFactor);

}  // namespace qbm
