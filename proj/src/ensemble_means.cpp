// ensemble_means.cpp: Closed-form, series, quadrature and asymptotic ensemble means

#include "qbm/ensemble_means.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/indicators.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {

namespace {

using std::numbers::pi;

struct WindowTerms {
    double wl, wu, W;
    double dl, du;  // omega^2 - Omega^2 at both ends
    double D;       // 1/dl - 1/du
    double E;       // omega_L/dl - omega_U/du
    double L;       // ln[(wU+W)(wL-W) / ((wU-W)(wL+W))]
    double lnU_L;   // ln(wU/wL)
    double lnDu_Dl; // ln(du/dl)

    explicit WindowTerms(const FrequencyWindow& w)
        : wl(w.omega_L), wu(w.omega_U), W(w.Omega),
          dl((wl - W) * (wl + W)), du((wu - W) * (wu + W)),
          D(1.0 / dl - 1.0 / du), E(wl / dl - wu / du),
          L(std::log((wu + W) * (wl - W) / ((wu - W) * (wl + W)))),
          lnU_L(std::log(wu / wl)), lnDu_Dl(std::log(du / dl)) {}

    double A0() const { return -(1.0 / (2.0 * W * W)) * (2.0 * lnU_L - lnDu_Dl); }
    // int omega/(w^2-W^2)^2 and W^2 int 1/(omega (w^2-W^2)^2)
    double J1() const { return 0.5 * D; }
    double J2() const { return -A0() + 0.5 * D; }
    // int 1/(w^2-W^2)^2 and W^2 int 1/(omega^2 (w^2-W^2)^2)
    double K1() const { return (E + L / (2.0 * W)) / (2.0 * W * W); }
    double K2() const { return ((wu - wl) / (wl * wu) + L / (2.0 * W)) / (W * W) + K1(); }
    // int omega^2/(w^2-W^2)^2 and W^2 int 1/(w^2-W^2)^2
    double G1() const { return -L / (2.0 * W) + W * W * K1(); }
    double G2() const { return W * W * K1(); }
};

void check_window(const FrequencyWindow& w) { w.validate(); }

void check_tau(MeanKind kind, const ThermalTime& tau) {
    if (kind != MeanKind::LowT_f0 && tau.zero_temperature()) {
        throw DomainError("high-temperature means require T > 0");
    }
}

// Cosine/sine-weighted integrals over [omega_L, omega_U] at time t.
struct OscillatoryIntegrals {
    double c, s;  // cos/sin(Omega t)
    double Is1;   // int sin/(w^2-W^2)
    double Ic1;   // int cos/(w^2-W^2)
    double Icw1;  // int w cos/(w^2-W^2)
    double Isw1;  // int w sin/(w^2-W^2)
    double cl, sl, cu, su;

    OscillatoryIntegrals(double t, const FrequencyWindow& w) {
        const double W = w.Omega;
        c = std::cos(W * t);
        s = std::sin(W * t);
        cl = std::cos(w.omega_L * t);
        sl = std::sin(w.omega_L * t);
        cu = std::cos(w.omega_U * t);
        su = std::sin(w.omega_U * t);
        const double ci_mpmp = f_ci(patterns::MPMP, t, w);
        const double ci_mppm = f_ci(patterns::MPPM, t, w);
        const double si_mppm = f_si(patterns::MPPM, t, w);
        const double si_mpmp = f_si(patterns::MPMP, t, w);
        const double si_pmmp = -si_mppm;
        const double si_pmpm = -si_mpmp;
        Is1 = (s * ci_mpmp + c * si_mppm) / (2.0 * W);
        Ic1 = (c * ci_mppm + s * si_pmpm) / (2.0 * W);
        Icw1 = 0.5 * (c * ci_mpmp + s * si_pmmp);
        Isw1 = 0.5 * (s * ci_mppm + c * si_mpmp);
    }
};

double bracket_closed(MeanKind kind, double t, const FrequencyWindow& w) {
    const WindowTerms k(w);
    const OscillatoryIntegrals o(t, w);
    const double W = k.W;
    const double W2 = W * W;
    const double c2 = o.c * o.c;
    // int w cos/()^2, int w sin/()^2
    const double Jc = 0.5 * (o.cl / k.dl - o.cu / k.du) - 0.5 * t * o.Is1;
    const double Hsw = 0.5 * (o.sl / k.dl - o.su / k.du) + 0.5 * t * o.Ic1;
    switch (kind) {
        case MeanKind::LowT_f0: {
            const double Js =
                (k.wl * o.sl / k.dl - k.wu * o.su / k.du + t * o.Icw1 - o.Is1) / (2.0 * W2);
            return k.J1() * (1.0 + c2) + k.J2() * (1.0 - c2) - 2.0 * o.c * Jc - 2.0 * o.s * W * Js;
        }
        case MeanKind::HighT_Gamma: {
            const double Hc =
                (k.wl * o.cl / k.dl - k.wu * o.cu / k.du - t * o.Isw1 - o.Ic1) / (2.0 * W2);
            const double si_diff = si(k.wu * t) - si(k.wl * t);
            const double Sw = (si_diff - o.Isw1) / (W2 * W2) + Hsw / W2;
            return k.K1() * (1.0 + c2) + k.K2() * (1.0 - c2) - 2.0 * o.c * Hc - 2.0 * o.s * W * Sw;
        }
        case MeanKind::HighT_B: {
            const double Hc =
                (k.wl * o.cl / k.dl - k.wu * o.cu / k.du - t * o.Isw1 - o.Ic1) / (2.0 * W2);
            const double Ic2w = o.Ic1 + W2 * Hc;
            return k.G1() * (1.0 + c2) + k.G2() * (1.0 - c2) - 2.0 * o.c * Ic2w - 2.0 * o.s * W * Hsw;
        }
    }
    throw UnsupportedPattern("unsupported mean kind");
}

// Series branch. With x = omega t, y = Omega t,
//   |S|^2 = t^2 sum_p c_p x^p,  S = (e^{i(w+W)t}-1)/(w+W) + (e^{i(w-W)t}-1)/(w-W),
// and each x^p is integrated exactly against omega^q.
constexpr int kSeriesOrder = 34;

std::vector<double> s2_coefficients(double y) {
    std::array<double, kSeriesOrder + 1> fact{};
    fact[0] = 1.0;
    for (int i = 1; i <= kSeriesOrder; ++i) fact[i] = fact[i - 1] * i;
    // poly[j][d]: coefficient of x^d in (x+y)^{j-1} + (x-y)^{j-1}
    std::vector<std::vector<double>> poly(kSeriesOrder);
    for (int j = 1; j < kSeriesOrder; ++j) {
        const int n = j - 1;
        poly[j].assign(j, 0.0);
        double binom = 1.0;
        double ypow = 1.0;
        for (int m = 0; m <= n; ++m) {
            if (m % 2 == 0) poly[j][n - m] = 2.0 * binom * ypow;
            binom = binom * (n - m) / (m + 1);
            ypow *= y;
        }
    }
    std::vector<double> c(kSeriesOrder - 1, 0.0);
    for (int n = 2; n <= kSeriesOrder; n += 2) {
        for (int j = 1; j < n; ++j) {
            const int kk = n - j;
            if (kk >= kSeriesOrder || j >= kSeriesOrder) continue;
            const double sign = ((j - kk) / 2) % 2 == 0 ? 1.0 : -1.0;
            const double scale = sign / (fact[j] * fact[kk]);
            for (int a = 0; a < j; ++a) {
                for (int b = 0; b < kk; ++b) c[a + b] += scale * poly[j][a] * poly[kk][b];
            }
        }
    }
    return c;
}

// (xU^r - xL^r)/r, with r = 0 meaning ln(xU/xL); r >= -1.
double power_difference(double xl, double xu, int r) {
    if (r == 0) return std::log(xu / xl);
    if (r == -1) return (xu - xl) / (xu * xl);
    double acc = 0.0;
    double pu = 1.0;
    for (int i = 0; i < r; ++i) {
        acc += pu * std::pow(xl, r - 1 - i);
        pu *= xu;
    }
    return (xu - xl) * acc / r;
}

// int |S|^2 omega^q d omega over the window, q in {-2, -1, 0}.
double s2_weighted_integral(double t, const FrequencyWindow& w, int q) {
    const auto c = s2_coefficients(w.Omega * t);
    const double xl = w.omega_L * t;
    const double xu = w.omega_U * t;
    double sum = 0.0;
    for (int p = static_cast<int>(c.size()) - 1; p >= 0; --p) {
        sum += c[p] * power_difference(xl, xu, p + q + 1);
    }
    return std::pow(t, 1 - q) * sum;
}

int weight_power(MeanKind kind) {
    switch (kind) {
        case MeanKind::LowT_f0: return -1;
        case MeanKind::HighT_Gamma: return -2;
        case MeanKind::HighT_B: return 0;
    }
    return 0;
}

double regime_factor(MeanKind kind, const ThermalTime& tau) {
    switch (kind) {
        case MeanKind::LowT_f0: return 1.0;
        case MeanKind::HighT_Gamma: return 1.0 / tau.tau();
        case MeanKind::HighT_B: return tau.tau();
    }
    return 1.0;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

}  // namespace

std::string_view to_string(MeanKind kind) noexcept {
    switch (kind) {
        case MeanKind::LowT_f0: return "LowT_f0";
        case MeanKind::HighT_Gamma: return "HighT_Gamma";
        case MeanKind::HighT_B: return "HighT_B";
    }
    return "?";
}

MeanKind parse_mean_kind(std::string_view text) {
    const std::string s = lower(text);
    if (s == "lowt_f0" || s == "lowt" || s == "low") return MeanKind::LowT_f0;
    if (s == "hight_gamma" || s == "gamma") return MeanKind::HighT_Gamma;
    if (s == "hight_b" || s == "b") return MeanKind::HighT_B;
    throw ConfigError("unknown mean kind '" + std::string(text) + "'");
}

double mean_prefactor(MeanKind kind, const FrequencyWindow& w, const ThermalTime& tau, const ModelParams& params,
                      PrefactorConvention convention) {
    check_tau(kind, tau);
    double norm = w.delta_omega();
    if (kind == MeanKind::HighT_Gamma && convention == PrefactorConvention::PrintedHighTGamma) {
        norm = w.omega_L * w.omega_U;
    }
    return 2.0 * params.M * params.gamma0_bar / (params.hbar * pi * norm) * regime_factor(kind, tau);
}

double mean_closed_form(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                        const ModelParams& params) {
    check_window(w);
    if (!(t > 0.0)) throw DomainError("mean_exact: t must be > 0 (use mean_short_time near 0)");
    return mean_prefactor(kind, w, tau, params) * bracket_closed(kind, t, w);
}

double mean_exact(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                  const ModelParams& params) {
    check_window(w);
    if (!(t > 0.0)) throw DomainError("mean_exact: t must be > 0 (use mean_short_time near 0)");
    check_tau(kind, tau);
    if (t * (w.omega_U + w.Omega) <= kMeanSeriesBranch) {
        const double coef = params.M * params.gamma0_bar / (2.0 * pi * params.hbar * w.delta_omega());
        return coef * regime_factor(kind, tau) * s2_weighted_integral(t, w, weight_power(kind));
    }
    return mean_prefactor(kind, w, tau, params) * bracket_closed(kind, t, w);
}

double uniform_mean(const std::function<double(double)>& f, double omega_L, double omega_U, double tol,
                    std::size_t initial_intervals) {
    if (!(omega_U > omega_L)) throw DomainError("uniform_mean: requires omega_L < omega_U");
    QuadratureOptions opt;
    opt.rel_tol = tol;
    opt.initial_intervals = initial_intervals;
    return integrate_adaptive(f, omega_L, omega_U, opt).value / (omega_U - omega_L);
}

double mean_quadrature(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                       const ModelParams& params, double tol, Integrand integrand) {
    check_window(w);
    if (!(tol >= 1e-12 && tol <= 1e-3)) throw DomainError("mean_quadrature: tol must lie in [1e-12, 1e-3]");
    if (!(t >= 0.0)) throw DomainError("mean_quadrature: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (integrand == Integrand::LeadingOrder) check_tau(kind, tau);
    // The window's Omega is authoritative for the mean.
    ModelParams local = params;
    local.Omega = w.Omega;
    const double C = coupling_constant(local, 1.0);
    auto f = [&](double omega) {
        const double a2 = alpha_abs2(t, Oscillator{omega, 1.0, C}, local);
        if (integrand == Integrand::Exact) {
            return a2 * (kind == MeanKind::HighT_B ? tau.tanh_factor(omega) : tau.coth_factor(omega));
        }
        switch (kind) {
            case MeanKind::LowT_f0: return a2;
            case MeanKind::HighT_Gamma: return a2 / (tau.tau() * omega);
            case MeanKind::HighT_B: return a2 * tau.tau() * omega;
        }
        return a2;
    };
    // A few panels per oscillation of e^{i omega t} across the window.
    const double cycles = t * w.delta_omega() / pi;
    const auto panels = static_cast<std::size_t>(std::clamp(std::ceil(cycles), 1.0, 1e5));
    return uniform_mean(f, w.omega_L, w.omega_U, tol, panels);
}

double short_time_coefficient(MeanKind kind, const FrequencyWindow& w, const ThermalTime& tau,
                              const ModelParams& params) {
    check_window(w);
    const double P = mean_prefactor(kind, w, tau, params);
    switch (kind) {
        case MeanKind::LowT_f0: return P * std::log(w.omega_U / w.omega_L);
        case MeanKind::HighT_Gamma: return P * w.delta_omega() / (w.omega_L * w.omega_U);
        case MeanKind::HighT_B: return P * w.delta_omega();
    }
    return 0.0;
}

PrintedOverlapCoefficient printed_overlap_coefficient(const FrequencyWindow& w, const ThermalTime& tau,
                                                      const ModelParams& params) {
    check_tau(MeanKind::HighT_B, tau);
    const double base = 2.0 * params.M * params.gamma0_bar * tau.tau() / (params.hbar * pi);
    return {base * tau.tau(), base / w.delta_omega()};
}

double mean_short_time(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                       const ModelParams& params, const ExpansionGuards& guards) {
    if (!guards.short_ok(t, w)) throw ValidityError("mean_short_time: t outside short-time guard");
    return short_time_coefficient(kind, w, tau, params) * t * t;
}

AsymptoteConstants asymptote_constants(MeanKind kind, const FrequencyWindow& w) {
    check_window(w);
    const WindowTerms k(w);
    switch (kind) {
        case MeanKind::LowT_f0: return {k.J1() - k.J2(), k.J1() + k.J2()};
        case MeanKind::HighT_Gamma: return {k.K1() - k.K2(), k.K1() + k.K2()};
        case MeanKind::HighT_B: return {k.G1() - k.G2(), k.G1() + k.G2()};
    }
    return {};
}

AsymptoteConstants asymptote_constants_printed(MeanKind kind, const FrequencyWindow& w) {
    check_window(w);
    const WindowTerms k(w);
    const double W2 = k.W * k.W;
    switch (kind) {
        case MeanKind::LowT_f0: {
            const double A0 = k.A0();
            return {A0, k.D - A0};
        }
        case MeanKind::HighT_Gamma: {
            const double A = -((k.wu - k.wl) / (k.wu * k.wl) + k.L / (2.0 * k.W)) / (4.0 * W2);
            return {A, k.E / (4.0 * W2) - A};
        }
        case MeanKind::HighT_B:
            return {std::log((k.wu - k.W) * (k.wl + k.W) / ((k.wl - k.W) * (k.wu + k.W))) / (2.0 * k.W), k.E};
    }
    return {};
}

double mean_long_time(MeanKind kind, double t, const FrequencyWindow& w, const ThermalTime& tau,
                      const ModelParams& params, const ExpansionGuards& guards) {
    if (!guards.long_ok(t, w)) throw ValidityError("mean_long_time: t outside long-time guard");
    const auto ab = asymptote_constants(kind, w);
    const double c = std::cos(w.Omega * t);
    return mean_prefactor(kind, w, tau, params) * (ab.A * c * c + ab.B);
}

}  // namespace qbm
