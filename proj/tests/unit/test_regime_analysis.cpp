#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qbm/errors.hpp"
#include "qbm/regime_analysis.hpp"

using namespace qbm;
using std::numbers::pi;

namespace {

const ModelParams kP{};
const FrequencyWindow kW{10.0, 20.0, 1.0};
const ThermalTime kCold = ThermalTime::from_temperature(0.0, kP);

}  // namespace

TEST_CASE("kind selection follows the regime") {
    CHECK(kind_for(TemperatureRegime::LowT, true) == MeanKind::LowT_f0);
    CHECK(kind_for(TemperatureRegime::LowT, false) == MeanKind::LowT_f0);
    CHECK(kind_for(TemperatureRegime::HighT, true) == MeanKind::HighT_Gamma);
    CHECK(kind_for(TemperatureRegime::HighT, false) == MeanKind::HighT_B);
    CHECK_FALSE(kind_for(TemperatureRegime::Intermediate, true).has_value());
    CHECK(classify_regime(kW, ThermalTime::from_tau(2.0, kP), kP) == TemperatureRegime::LowT);
    CHECK(classify_regime(kW, ThermalTime::from_temperature(200.0, kP), kP) == TemperatureRegime::HighT);
    CHECK(classify_regime(kW, ThermalTime::from_temperature(5.0, kP), kP) == TemperatureRegime::Intermediate);
}

TEST_CASE("timescales") {
    const double dX = 0.8;
    const auto low = gaussian_timescale(MeanKind::LowT_f0, dX, kW, ThermalTime::from_tau(2.0, kP), kP);
    CHECK(low.tau_derived * low.tau_derived * low.c2 * dX * dX == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(low.tau_paper == doctest::Approx(pi * 10.0 / (dX * std::log(2.0))).epsilon(1e-15));

    const auto t1 = ThermalTime::from_temperature(1000.0, kP);
    const auto t2 = ThermalTime::from_temperature(2000.0, kP);
    const auto t4 = ThermalTime::from_temperature(4000.0, kP);
    const auto g1 = gaussian_timescale(MeanKind::HighT_Gamma, dX, kW, t1, kP);
    const auto g2 = gaussian_timescale(MeanKind::HighT_Gamma, dX, kW, t2, kP);
    const auto g4 = gaussian_timescale(MeanKind::HighT_Gamma, dX, kW, t4, kP);
    const auto b1 = gaussian_timescale(MeanKind::HighT_B, dX, kW, t1, kP);
    const auto b2 = gaussian_timescale(MeanKind::HighT_B, dX, kW, t2, kP);
    const auto b4 = gaussian_timescale(MeanKind::HighT_B, dX, kW, t4, kP);
    CHECK(g1.tau_paper / g2.tau_paper == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b2.tau_paper / b1.tau_paper == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g1.tau_derived / g4.tau_derived == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b4.tau_derived / b1.tau_derived == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g1.tau_paper == doctest::Approx(t1.tau() * pi * 200.0 / dX).epsilon(1e-15));
    CHECK(b1.tau_paper == doctest::Approx(pi / (t1.tau() * dX)).epsilon(1e-15));

    CHECK_THROWS_AS(gaussian_timescale(MeanKind::HighT_B, dX, kW, kCold, kP), DomainError);
    CHECK_THROWS_AS(gaussian_timescale(MeanKind::LowT_f0, dX, kW, t1, kP), DomainError);
    CHECK_NOTHROW(gaussian_timescale(MeanKind::LowT_f0, dX, kW, t1, kP, false));
    CHECK_THROWS_AS(gaussian_timescale(MeanKind::LowT_f0, 0.0, kW, kCold, kP), DomainError);
}

TEST_CASE("Monte Carlo decay recovers the derived timescale") {
    EnvironmentSpec spec;
    spec.n_unobserved = 10000;
    spec.seed = 17;
    const auto env = sample_environment(spec, kP);
    const double dX = 1.0;
    const auto ts = gaussian_timescale(MeanKind::LowT_f0, dX, kW, kCold, kP);
    std::vector<double> t, y;
    for (int i = 0; i < 16; ++i) {
        const double ti = 1e-4 / 20.0 * std::pow(100.0, i / 15.0);
        t.push_back(ti);
        y.push_back(-std::log(gamma_factor(ti, dX, env.unobserved, kCold, kP)) / 10000.0);
    }
    const auto fit = fit_quadratic(t, y);
    CHECK(std::abs(fit.coefficient * ts.tau_derived * ts.tau_derived - 1.0) <= 0.05);
}

TEST_CASE("quadratic fit through the origin") {
    const auto f = fit_quadratic({1.0, 2.0, 3.0}, {3.0, 12.0, 27.0});
    CHECK(f.coefficient == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(f.std_error <= 1e-14);
    CHECK_THROWS_AS(fit_quadratic({1.0}, {1.0}), DomainError);
}

TEST_CASE("macrofraction bounds") {
    const auto b = nmac_bound(MeanKind::LowT_f0, 1e-3, kW, kCold, kP);
    const double lg = std::log(1e3);
    CHECK(b.bound_fast == doctest::Approx(pi * 400.0 * 100.0 / 30.0 * lg).epsilon(1e-15));
    CHECK(b.bound_exact == doctest::Approx(2 * lg / (2.0 / (pi * 10.0) * 0.003821141619)).epsilon(1e-9));
    CHECK(nmac_bound(MeanKind::LowT_f0, 1.0, kW, kCold, kP).bound_exact == 0.0);
    CHECK(b.n_mac(2.0) == doctest::Approx(b.bound_exact / 4.0));
    CHECK(b.n_mac(1.0) == doctest::Approx(4.0 * b.n_mac(2.0)));
    CHECK(std::isinf(b.n_mac(0.0)));
    CHECK_THROWS_AS(nmac_bound(MeanKind::LowT_f0, 0.0, kW, kCold, kP), DomainError);
    CHECK_THROWS_AS(nmac_bound(MeanKind::LowT_f0, 1.5, kW, kCold, kP), DomainError);

    // Strictly decreasing in epsilon.
    CHECK(nmac_bound(MeanKind::LowT_f0, 1e-4, kW, kCold, kP).bound_exact > b.bound_exact);
    // Opposite temperature trends of the two high-T bounds.
    const auto t1 = ThermalTime::from_temperature(500.0, kP);
    const auto t2 = ThermalTime::from_temperature(1000.0, kP);
    CHECK(nmac_bound(MeanKind::HighT_Gamma, 1e-3, kW, t2, kP).bound_exact <
          nmac_bound(MeanKind::HighT_Gamma, 1e-3, kW, t1, kP).bound_exact);
    CHECK(nmac_bound(MeanKind::HighT_B, 1e-3, kW, t2, kP).bound_exact >
          nmac_bound(MeanKind::HighT_B, 1e-3, kW, t1, kP).bound_exact);
}

TEST_CASE("fast-environment approximations of the bound") {
    const FrequencyWindow fast{100.0, 200.0, 1.0};
    const auto hot = ThermalTime::from_temperature(1e4, kP);
    const auto ob = nmac_bound(MeanKind::HighT_B, 1e-3, fast, hot, kP);
    CHECK(std::abs(ob.bound_fast / ob.bound_exact - 1.0) <= 0.25);
    // The low-T approximation drops A0, which is close to B0, so it is
    // low by a factor two rather than within 25%.
    const auto lb = nmac_bound(MeanKind::LowT_f0, 1e-3, fast, kCold, kP);
    CHECK(lb.bound_fast / lb.bound_exact == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("temperature constraint") {
    CHECK(temperature_constraint(1.0, 100.0, kW, kP, 0.0).satisfied);
    const double rhs = 1.0 / (2 * pi * 20.0);
    const auto eq = temperature_constraint(1.0, 4.0, kW, kP, 2.0 * rhs);
    CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-15));
    CHECK_FALSE(temperature_constraint(1.0, 4.0, kW, kP, 2.0 * rhs * (1 + 1e-12)).satisfied);
    // Quadrupling N_mac doubles the admissible temperature.
    const double Tmax1 = rhs * 1.0 * std::sqrt(9.0);
    CHECK(temperature_constraint(1.0, 36.0, kW, kP, 1.999 * Tmax1).satisfied);
    CHECK_FALSE(temperature_constraint(1.0, 9.0, kW, kP, 1.001 * Tmax1).satisfied);
    CHECK_THROWS_AS(temperature_constraint(0.0, 1.0, kW, kP, 1.0), DomainError);
}

TEST_CASE("macrofraction ratio") {
    CHECK(macrofraction_ratio(3.0, kP, 1e-3, 1e-3) == doctest::Approx(18.0));
    CHECK(macrofraction_ratio(1.0, kP, 0.01, 0.01) == doctest::Approx(2.0));
    CHECK(macrofraction_ratio(1.0, kP, 1e-2, 1e-4) == doctest::Approx(4.0));
    CHECK_THROWS_AS(macrofraction_ratio(1.0, kP, 1.0, 0.5), DomainError);

    const FrequencyWindow fast{100.0, 200.0, 1.0};
    const double T = 1e4;
    const auto hot = ThermalTime::from_temperature(T, kP);
    const double direct = nmac_bound(MeanKind::HighT_B, 1e-4, fast, hot, kP).bound_fast /
                          nmac_bound(MeanKind::HighT_Gamma, 1e-2, fast, hot, kP).bound_fast;
    CHECK(std::abs(direct / macrofraction_ratio(T, kP, 1e-2, 1e-4) - 1.0) <= 0.3);
}

TEST_CASE("averaging window") {
    AveragingWindow win;
    const auto g = win.grid(kW);
    CHECK(g.size() == 640);
    CHECK(g.front() == doctest::Approx(10.0 / 9.0));
    CHECK(g[64] - g[0] == doctest::Approx(2 * pi));
    win.t_start = 50.0;
    CHECK(win.grid(kW).front() == 50.0);
    win.periods = 0;
    CHECK_THROWS_AS(win.grid(kW), ConfigError);
}

TEST_CASE("SBS verdict end to end") {
    const double dX = 2.5;
    const auto bound = nmac_bound(MeanKind::LowT_f0, 1e-3, kW, kCold, kP);
    EnvironmentSpec spec;
    spec.n_unobserved = static_cast<std::size_t>(std::ceil(2.0 * bound.n_mac(dX)));
    spec.n_observed_per_mac = spec.n_unobserved;
    spec.n_macrofractions = 1;
    spec.seed = 3;
    AveragingWindow win;
    win.t_start = 20.0;
    const auto r = sbs_verdict(spec, kP, dX, 1e-3, 1e-3, win);
    CHECK(r.pass);
    CHECK(r.avg_gamma < 1e-3);
    CHECK(r.avg_overlap.at(0) < 1e-3);
    CHECK(r.regime == TemperatureRegime::LowT);
    CHECK(r.bound_dec.has_value());
    CHECK_FALSE(r.constraint_unobserved.has_value());

    const auto again = sbs_verdict(spec, kP, dX, 1e-3, 1e-3, win);
    CHECK(again.avg_gamma == r.avg_gamma);
    CHECK(again.avg_overlap == r.avg_overlap);

    const auto zero = sbs_verdict(spec, kP, 0.0, 1e-3, 1e-3, win);
    CHECK_FALSE(zero.pass);
    CHECK(zero.avg_gamma == 1.0);
    CHECK(zero.avg_overlap.at(0) == 1.0);

    EnvironmentSpec single;
    single.seed = 1;
    ModelParams weak;
    weak.gamma0_bar = 1e-4;
    const auto lone = sbs_verdict(single, weak, 1.0, 1e-3, 1e-3, win);
    CHECK_FALSE(lone.pass);
    CHECK(lone.avg_gamma > 0.99);
    CHECK(lone.avg_overlap.at(0) > 0.99);
}

TEST_CASE("high-temperature report carries the constraints") {
    EnvironmentSpec spec;
    spec.T = 500.0;
    spec.n_unobserved = 10;
    spec.n_observed_per_mac = 10;
    const auto r = sbs_verdict(spec, kP, 0.5, 1e-3, 1e-2, {});
    CHECK(r.regime == TemperatureRegime::HighT);
    REQUIRE(r.constraint_unobserved.has_value());
    REQUIRE(r.macrofraction_ratio.has_value());
    CHECK(*r.macrofraction_ratio == doctest::Approx(macrofraction_ratio(500.0, kP, 1e-3, 1e-2)));
    CHECK(r.timescales.size() == 2);
    CHECK(r.bound_dec->kind == MeanKind::HighT_Gamma);
    CHECK(r.bound_ort->kind == MeanKind::HighT_B);
}
