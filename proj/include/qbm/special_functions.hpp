// special_functions.hpp: Sine/cosine integrals and their four-term signed combinations
//
// The combinations F_Si / F_Ci sum Si or Ci over the arguments
//   (omega_L - Omega) t, (omega_U - Omega) t, (omega_L + Omega) t, (omega_U + Omega) t
// with a sign pattern. They are the building blocks of the closed-form ensemble means.

#pragma once

#include <array>
#include <string>

#include "qbm/errors.hpp"

namespace qbm {

// Below this |x| Si/Ci use their Maclaurin series, above it the continued fraction.
inline constexpr double kSiCiSeriesBranch = 4.0;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Si(x) = int_0^x sin(u)/u du. Odd; NaN -> DomainError.
double si(double x);

// Ci(x) = gamma + ln x + int_0^x (cos u - 1)/u du, x > 0.
double ci(double x);

// Cin(x) = int_0^x (1 - cos u)/u du = gamma + ln x - Ci(x). Entire, even.
double cin(double x);

// Computes Si and Ci together (one continued-fraction evaluation for x > branch).
void sici(double x, double& si_out, double& ci_out);

class SignPattern {
public:
    constexpr SignPattern(int s1, int s2, int s3, int s4) : s_{s1, s2, s3, s4} { check(); }

    constexpr int operator[](std::size_t i) const { return s_[i]; }
    constexpr SignPattern negated() const { return {-s_[0], -s_[1], -s_[2], -s_[3]}; }
    // Signs sum to zero, so the log singularities of Ci cancel as t -> 0.
    constexpr bool balanced() const { return s_[0] + s_[1] + s_[2] + s_[3] == 0; }
    constexpr bool operator==(const SignPattern&) const = default;

    std::string str() const;

private:
    constexpr void check() const {
        for (int v : s_) {
            if (v != 1 && v != -1) throw UnsupportedPattern("sign pattern entries must be +1 or -1");
        }
    }

    std::array<int, 4> s_;
};

namespace patterns {
inline constexpr SignPattern PMPM{1, -1, 1, -1};
inline constexpr SignPattern PMMP{1, -1, -1, 1};
inline constexpr SignPattern MPMP{-1, 1, -1, 1};
inline constexpr SignPattern MPPM{-1, 1, 1, -1};
}  // namespace patterns

struct FrequencyWindow {
    double omega_L{10.0};
    double omega_U{20.0};
    double Omega{1.0};

    // 0 < Omega < omega_L < omega_U
    void validate() const;
    double delta_omega() const noexcept { return omega_U - omega_L; }
    // The four Si/Ci arguments divided by t.
    std::array<double, 4> rates() const noexcept {
        return {omega_L - Omega, omega_U - Omega, omega_L + Omega, omega_U + Omega};
    }
};

// Guards of the regime expansions.
struct ExpansionGuards {
    double short_max{0.1};  // t * omega_U <= short_max
    double long_min{10.0};  // t * (omega_L - Omega) >= long_min

    bool short_ok(double t, const FrequencyWindow& w) const noexcept {
        return t >= 0.0 && t * w.omega_U <= short_max;
    }
    bool long_ok(double t, const FrequencyWindow& w) const noexcept {
        return t * (w.omega_L - w.Omega) >= long_min;
    }
};

double f_si(const SignPattern& pattern, double t, const FrequencyWindow& w);

// t > 0. Balanced patterns near t = 0 are summed as logs of argument ratios
// minus Cin terms, which avoids subtracting large logarithms.
double f_ci(const SignPattern& pattern, double t, const FrequencyWindow& w);

// t -> 0+ limit of f_ci for balanced patterns: sum_i s_i ln(rate_i).
double f_ci_limit(const SignPattern& pattern, const FrequencyWindow& w);

// Short-time expansions for (+,-,+,-), (+,-,-,+) and their negations.
// f_si_short is accurate to O(t^5), f_ci_short to O(t^4).
double f_si_short(const SignPattern& pattern, double t, const FrequencyWindow& w,
                  const ExpansionGuards& guards = {});
double f_ci_short(const SignPattern& pattern, double t, const FrequencyWindow& w,
                  const ExpansionGuards& guards = {});

// Long-time asymptotes. The trigonometric form approximates t * F; these return it
// divided by t, so the error is O(t^-2).
double f_si_long(const SignPattern& pattern, double t, const FrequencyWindow& w,
                 const ExpansionGuards& guards = {});
double f_ci_long(const SignPattern& pattern, double t, const FrequencyWindow& w,
                 const ExpansionGuards& guards = {});

}  // namespace qbm
