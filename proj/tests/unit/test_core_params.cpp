#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <mpfr.h>

#include "qbm/core_params.hpp"
#include "qbm/errors.hpp"

using namespace qbm;

namespace {

// 2 sqrt(M m g / pi) at 256 bits.
double coupling_mpfr(double M, double m, double g) {
    mpfr_t x, pi;
    mpfr_inits2(256, x, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(x, M, MPFR_RNDN);
    mpfr_mul_d(x, x, m, MPFR_RNDN);
    mpfr_mul_d(x, x, g, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div(x, x, pi, MPFR_RNDN);
    mpfr_sqrt(x, x, MPFR_RNDN);
    mpfr_mul_ui(x, x, 2, MPFR_RNDN);
    const double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clears(x, pi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

ModelParams natural() { return ModelParams{}; }

}  // namespace

TEST_CASE("coupling constant cancels to 2 when M gamma0 m = pi") {
    ModelParams p;
    p.M = std::numbers::pi;
    CHECK(coupling_constant(p, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    p.M = 1.0;
    p.gamma0_bar = std::numbers::pi;
    CHECK(coupling_constant(p, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("coupling constant matches a 256-bit evaluation") {
    ModelParams p;
    p.M = 2.0;
    p.gamma0_bar = 0.5;
    const double ref = coupling_mpfr(2.0, 3.0, 0.5);
    CHECK(std::abs(coupling_constant(p, 3.0) - ref) <= 2e-16 * ref);
    CHECK(ref == doctest::Approx(1.9544).epsilon(1e-4));
}

TEST_CASE("coupling constant scales as the square root of each mass") {
    ModelParams p;
    p.M = 0.7;
    const double c = coupling_constant(p, 1.3);
    p.M = 2.8;
    CHECK(coupling_constant(p, 1.3) == doctest::Approx(2.0 * c).epsilon(1e-15));
    p.M = 0.7;
    CHECK(coupling_constant(p, 5.2) == doctest::Approx(2.0 * c).epsilon(1e-15));
}

TEST_CASE("coupling constant rejects non-positive input") {
    ModelParams p;
    CHECK_THROWS_AS(coupling_constant(p, 0.0), DomainError);
    CHECK_THROWS_AS(coupling_constant(p, -1.0), DomainError);
    p.M = 0.0;
    CHECK_THROWS_AS(coupling_constant(p, 1.0), DomainError);
}

TEST_CASE("regime classification thresholds") {
    EnvironmentSpec s;
    s.omega_L = 1.0;
    s.omega_U = 20.0;
    s.T = 0.01;
    CHECK(classify_regime(s, natural()) == TemperatureRegime::LowT);
    s.T = 0.1;  // boundary belongs to LowT
    CHECK(classify_regime(s, natural()) == TemperatureRegime::LowT);
    s.T = 1000.0;
    CHECK(classify_regime(s, natural()) == TemperatureRegime::HighT);
    s.T = 200.0;
    CHECK(classify_regime(s, natural()) == TemperatureRegime::HighT);
    s.T = 5.0;
    CHECK(classify_regime(s, natural()) == TemperatureRegime::Intermediate);
    s.T = 0.0;
    CHECK(classify_regime(s, natural()) == TemperatureRegime::LowT);
    // The factor is configurable: 100 instead of 10 moves T = 5 out of reach of HighT
    // and 0.1 pulls it into LowT.
    s.T = 5.0;
    CHECK(classify_regime(s, natural(), 0.1) == TemperatureRegime::LowT);
    s.T = 150.0;
    CHECK(classify_regime(s, natural(), 100.0) == TemperatureRegime::Intermediate);
    CHECK(to_string(TemperatureRegime::Intermediate) == "Intermediate");
}

TEST_CASE("fast-environment flag uses the factor-10 threshold") {
    EnvironmentSpec s;
    ModelParams p;
    s.omega_L = 10.0;
    CHECK(s.is_fast(p));
    s.omega_L = 9.999;
    CHECK_FALSE(s.is_fast(p));
    CHECK(s.is_fast(p, 5.0));
}

TEST_CASE("thermal time") {
    ModelParams p;
    p.hbar = 2.0;
    p.kB = 0.5;
    const auto t = ThermalTime::from_temperature(4.0, p);
    CHECK(t.tau() == 2.0 / (2.0 * 0.5 * 4.0));
    CHECK(t.temperature() == 4.0);
    CHECK(t.coth_factor(3.0) == doctest::Approx(1.0 / std::tanh(1.5)));
    CHECK(t.tanh_factor(3.0) == doctest::Approx(std::tanh(1.5)));

    const auto back = ThermalTime::from_tau(t.tau(), p);
    CHECK(back.temperature() == doctest::Approx(4.0).epsilon(1e-15));

    const auto zero = ThermalTime::from_temperature(0.0, p);
    CHECK(zero.zero_temperature());
    CHECK(std::isinf(zero.tau()));
    CHECK(zero.coth_factor(1e-3) == 1.0);
    CHECK(zero.tanh_factor(1e-3) == 1.0);
    CHECK(ThermalTime::from_tau(std::numeric_limits<double>::infinity(), p).zero_temperature());

    CHECK_THROWS_AS(ThermalTime::from_temperature(-1.0, p), DomainError);
    CHECK_THROWS_AS(ThermalTime::from_tau(0.0, p), DomainError);
}

TEST_CASE("parameter validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.hbar = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);

    EnvironmentSpec s;
    CHECK_NOTHROW(s.validate());
    s.omega_U = s.omega_L;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s = {};
    s.T = -1.0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s = {};
    s.n_macrofractions = 0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
}
