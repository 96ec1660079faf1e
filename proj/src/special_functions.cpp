// special_functions.cpp: Si, Ci, Cin and the F_Si / F_Ci combinations

#include "qbm/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qbm/errors.hpp"

namespace qbm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Maclaurin series, |x| <= kSiCiSeriesBranch.
double si_series(double x) {
    const double x2 = x * x;
    double term = x;  // (-1)^k x^(2k+1) / (2k+1)!
    double sum = x;
    for (int k = 0; k < 60; ++k) {
        term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        const double add = term / (2.0 * k + 3.0);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum) * 0.1) break;
    }
    return sum;
}

double cin_series(double x) {
    const double x2 = x * x;
    double term = 0.5 * x2;  // (-1)^(k+1) x^(2k) / (2k)!
    double sum = 0.25 * x2;
    for (int k = 1; k < 60; ++k) {
        term *= -x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        const double add = term / (2.0 * k + 2.0);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum) * 0.1) break;
    }
    return sum;
}

// Modified Lentz evaluation of E1(ix) for x > branch; Ci = -Re, Si = pi/2 + Im.
void sici_continued_fraction(double x, double& s, double& c) {
    using cd = std::complex<double>;
    constexpr double tiny = 1e-300;
    cd b(1.0, x);
    cd cc(1.0 / tiny, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    for (int i = 2; i < 100000; ++i) {
        const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const cd del = cc * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= cd(std::cos(x), -std::sin(x));
    c = -h.real();
    s = std::numbers::pi / 2.0 + h.imag();
}

// +1 when pattern == base, -1 when it is the negation, 0 otherwise.
int orientation(const SignPattern& pattern, const SignPattern& base) {
    if (pattern == base) return 1;
    if (pattern == base.negated()) return -1;
    return 0;
}

void require_tabulated(const SignPattern& pattern) {
    if (orientation(pattern, patterns::PMPM) == 0 && orientation(pattern, patterns::PMMP) == 0) {
        throw UnsupportedPattern("expansion available only for (+,-,+,-), (+,-,-,+) and their negations, got " +
                                 pattern.str());
    }
}

}  // namespace

void sici(double x, double& si_out, double& ci_out) {
    if (std::isnan(x)) throw DomainError("sici: NaN argument");
    const double ax = std::abs(x);
    if (ax == 0.0) {
        si_out = 0.0;
        ci_out = -std::numeric_limits<double>::infinity();
    } else if (std::isinf(ax)) {
        si_out = std::numbers::pi / 2.0;
        ci_out = 0.0;
    } else if (ax <= kSiCiSeriesBranch) {
        si_out = si_series(ax);
        ci_out = kEulerGamma + std::log(ax) - cin_series(ax);
    } else {
        sici_continued_fraction(ax, si_out, ci_out);
    }
    if (x < 0.0) si_out = -si_out;
}

double si(double x) {
    if (std::isnan(x)) throw DomainError("si: NaN argument");
    const double ax = std::abs(x);
    double s = 0.0;
    if (ax <= kSiCiSeriesBranch) {
        s = si_series(ax);
    } else {
        double c = 0.0;
        sici(ax, s, c);
    }
    return x < 0.0 ? -s : s;
}

double ci(double x) {
    if (!(x > 0.0)) throw DomainError("ci: argument must be > 0");
    double s = 0.0;
    double c = 0.0;
    sici(x, s, c);
    return c;
}

double cin(double x) {
    if (std::isnan(x)) throw DomainError("cin: NaN argument");
    const double ax = std::abs(x);
    if (ax <= kSiCiSeriesBranch) return cin_series(ax);
    return kEulerGamma + std::log(ax) - ci(ax);
}

std::string SignPattern::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        out += s_[i] > 0 ? '+' : '-';
        out += i < 3 ? ',' : ')';
    }
    return out;
}

void FrequencyWindow::validate() const {
    if (!(Omega > 0.0) || !(omega_L > Omega) || !(omega_U > omega_L) || !std::isfinite(omega_U)) {
        throw ConfigError("frequency window requires 0 < Omega < omega_L < omega_U");
    }
}

double f_si(const SignPattern& pattern, double t, const FrequencyWindow& w) {
    if (!(t >= 0.0)) throw DomainError("f_si: t must be >= 0");
    const auto r = w.rates();
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) sum += pattern[i] * si(r[i] * t);
    return sum;
}

double f_ci_limit(const SignPattern& pattern, const FrequencyWindow& w) {
    if (!pattern.balanced()) {
        throw UnsupportedPattern("f_ci_limit: pattern " + pattern.str() + " diverges as t -> 0");
    }
    const auto r = w.rates();
    double num = 1.0;
    double den = 1.0;
    for (std::size_t i = 0; i < 4; ++i) (pattern[i] > 0 ? num : den) *= r[i];
    return std::log(num / den);
}

double f_ci(const SignPattern& pattern, double t, const FrequencyWindow& w) {
    if (!(t > 0.0)) throw DomainError("f_ci: t must be > 0");
    const auto r = w.rates();
    if (pattern.balanced() && r[0] * t < 1.0) {
        double sum = f_ci_limit(pattern, w);
        for (std::size_t i = 0; i < 4; ++i) sum -= pattern[i] * cin(r[i] * t);
        return sum;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) sum += pattern[i] * ci(r[i] * t);
    return sum;
}

double f_si_short(const SignPattern& pattern, double t, const FrequencyWindow& w,
                  const ExpansionGuards& guards) {
    require_tabulated(pattern);
    if (!guards.short_ok(t, w)) throw ValidityError("f_si_short: t outside short-time guard");
    const double wl = w.omega_L, wu = w.omega_U, W = w.Omega;
    const double t3 = t * t * t;
    if (const int o = orientation(pattern, patterns::PMPM); o != 0) {
        return o * (2.0 * (wl - wu) * t +
                    t3 / 9.0 * (wu * wu * wu - wl * wl * wl + 3.0 * W * W * wu - 3.0 * W * W * wl));
    }
    const int o = orientation(pattern, patterns::PMMP);
    return o * (t3 / 3.0 * W * (wl * wl - wu * wu));
}

double f_ci_short(const SignPattern& pattern, double t, const FrequencyWindow& w,
                  const ExpansionGuards& guards) {
    require_tabulated(pattern);
    if (!guards.short_ok(t, w)) throw ValidityError("f_ci_short: t outside short-time guard");
    const double wl = w.omega_L, wu = w.omega_U, W = w.Omega;
    const double t2 = t * t;
    if (const int o = orientation(pattern, patterns::PMPM); o != 0) {
        return o * (std::log((wl * wl - W * W) / (wu * wu - W * W)) + 0.5 * (wu * wu - wl * wl) * t2);
    }
    const int o = orientation(pattern, patterns::PMMP);
    return o * (std::log((wl - W) * (wu + W) / ((wl + W) * (wu - W))) + W * (wl - wu) * t2);
}

double f_si_long(const SignPattern& pattern, double t, const FrequencyWindow& w,
                 const ExpansionGuards& guards) {
    require_tabulated(pattern);
    if (!guards.long_ok(t, w)) throw ValidityError("f_si_long: t outside long-time guard");
    const double wl = w.omega_L, wu = w.omega_U, W = w.Omega;
    const double c = std::cos(W * t), s = std::sin(W * t);
    const double dl = wl * wl - W * W, du = wu * wu - W * W;
    const double cl = std::cos(wl * t), sl = std::sin(wl * t);
    const double cu = std::cos(wu * t), su = std::sin(wu * t);
    if (const int o = orientation(pattern, patterns::PMPM); o != 0) {
        const double tf = 2.0 * ((wu * cu * c + W * su * s) / du - (wl * cl * c + W * sl * s) / dl);
        return o * tf / t;
    }
    const int o = orientation(pattern, patterns::PMMP);
    const double tf = 2.0 * ((wu * su * s + W * cu * c) / du - (wl * sl * s + W * cl * c) / dl);
    return o * tf / t;
}

double f_ci_long(const SignPattern& pattern, double t, const FrequencyWindow& w,
                 const ExpansionGuards& guards) {
    require_tabulated(pattern);
    if (!guards.long_ok(t, w)) throw ValidityError("f_ci_long: t outside long-time guard");
    const double wl = w.omega_L, wu = w.omega_U, W = w.Omega;
    const double c = std::cos(W * t), s = std::sin(W * t);
    const double dl = wl * wl - W * W, du = wu * wu - W * W;
    const double cl = std::cos(wl * t), sl = std::sin(wl * t);
    const double cu = std::cos(wu * t), su = std::sin(wu * t);
    if (const int o = orientation(pattern, patterns::PMPM); o != 0) {
        const double tf = 2.0 * ((wl * sl * c - W * cl * s) / dl - (wu * su * c - W * cu * s) / du);
        return o * tf / t;
    }
    const int o = orientation(pattern, patterns::PMMP);
    const double tf = 2.0 * ((W * sl * c - wl * cl * s) / dl - (W * su * c - wu * cu * s) / du);
    return o * tf / t;
}

}  // namespace qbm
