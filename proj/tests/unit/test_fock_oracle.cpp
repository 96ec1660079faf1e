#include "doctest.h"

#include <cmath>
#include <complex>

#include "physics_oracles.hpp"
#include "qbm/errors.hpp"
#include "qbm/fock_oracle.hpp"

using namespace qbm;
using cd = std::complex<double>;

namespace {

const ModelParams kP{};

Oscillator make_osc(double omega) { return {omega, 1.0, coupling_constant(kP, 1.0)}; }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// tr(rho x) with x = sqrt(hbar / 2 m w) (a + a^dag).
double mean_position(const Eigen::MatrixXcd& rho, double omega, double m) {
    cd tr_a = 0.0;
    for (Eigen::Index n = 1; n < rho.rows(); ++n) tr_a += rho(n, n - 1) * std::sqrt(static_cast<double>(n));
    return std::sqrt(kP.hbar / (2.0 * m * omega)) * 2.0 * tr_a.real();
}

}  // namespace

TEST_CASE("thermal states") {
    const auto vac = thermal_state(0.0, 5);
    CHECK(vac.matrix(0, 0) == cd(1.0, 0.0));
    CHECK(max_abs(vac.matrix) == 1.0);
    CHECK(vac.matrix.trace().real() == 1.0);
    CHECK(vac.trace_deficit == 0.0);

    const auto one = thermal_state(1.0, 60);
    CHECK(one.trace_deficit <= 1e-17);
    CHECK(one.trace_deficit == doctest::Approx(std::pow(0.5, 60)));

    CHECK_THROWS_AS(thermal_state(1.0, 10), TruncationError);
    CHECK_THROWS_AS(thermal_state(-1.0, 10), DomainError);

    for (double T : {0.5, 3.0, 20.0}) {
        const double omega = 4.0;
        const double nbar = thermal_occupation(omega, T, kP);
        const TruncationBudget b{1e-14, 4000};
        const auto s = thermal_state(nbar, b.thermal_dim(nbar), b);
        const double purity = (s.matrix * s.matrix).trace().real();
        const double tau = ThermalTime::from_temperature(T, kP).tau();
        CHECK(purity == doctest::Approx(std::tanh(tau * omega)).epsilon(1e-12));
    }
    CHECK(thermal_occupation(4.0, 0.0, kP) == 0.0);
}

TEST_CASE("displacement operator") {
    CHECK(max_abs(displacement(0.0, 12) - Eigen::MatrixXcd::Identity(12, 12)) == 0.0);
    const auto D = displacement(1.0, 40);
    CHECK(std::abs(D(0, 0) - std::exp(-0.5)) <= 1e-10);

    const cd a(0.7, -1.1);
    const auto Dp = displacement(a, 60);
    const auto Dm = displacement(-a, 60);
    const Eigen::MatrixXcd prod = (Dp * Dm).topLeftCorner(30, 30);
    CHECK(max_abs(prod - Eigen::MatrixXcd::Identity(30, 30)) <= 1e-9);
    const Eigen::MatrixXcd cols = Dp.leftCols(30);
    CHECK(max_abs(cols.adjoint() * cols - Eigen::MatrixXcd::Identity(30, 30)) <= 1e-9);

    CHECK_THROWS_AS(displacement(cd(2.0, 0.0), 30), TruncationError);
}

TEST_CASE("displacement matches the Laguerre closed form") {
    for (const cd a : {cd(1.0, 0.0), cd(-0.4, 1.3), cd(0.0, -1.8)}) {
        const auto D = displacement(a, 50);
        double worst = 0.0;
        for (unsigned m = 0; m < 30; ++m) {
            for (unsigned n = 0; n < 30; ++n) worst = std::max(worst, std::abs(D(m, n) - oracle::displacement_element(a, m, n)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("evolved state") {
    const auto osc = make_osc(10.0);
    const TruncationBudget budget{1e-10, 400};
    const double nbar = thermal_occupation(10.0, 5.0, kP);
    const auto s0 = evolved_state(0.5, 0.0, osc, kP, 5.0, budget);
    const auto th = thermal_state(nbar, s0.dim, budget);
    CHECK(max_abs(s0.matrix - th.matrix) <= 1e-14);
    const auto x0 = evolved_state(0.0, 0.7, osc, kP, 5.0, budget);
    CHECK(max_abs(x0.matrix - thermal_state(nbar, x0.dim, budget).matrix) <= 1e-14);

    const auto s = evolved_state(0.5, 0.7, osc, kP, 5.0, budget);
    CHECK(max_abs(s.matrix - s.matrix.adjoint()) <= 1e-12);
    CHECK(s.trace_deficit <= 10 * budget.max_trace_deficit);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.matrix);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
}

TEST_CASE("mean position follows the classical driven oscillator") {
    for (double omega : {10.0, 3.0}) {
        for (double T : {0.0, 5.0}) {
            const auto osc = make_osc(omega);
            const double X0 = 0.8, t = 1.3;
            const auto s = evolved_state(X0, t, osc, kP, T, {1e-12, 600});
            const double ode = oracle::driven_position(t, omega, osc.m, osc.C, X0, kP.Omega, 20000);
            CAPTURE(omega);
            CAPTURE(T);
            CHECK(mean_position(s.matrix, omega, osc.m) == doctest::Approx(ode).epsilon(1e-8));
        }
    }
}

TEST_CASE("oracles reproduce the per-oscillator formulas") {
    const auto osc = make_osc(10.0);
    const TruncationBudget budget{1e-10, 400};
    const double dX = 0.5, t = 0.7, T = 5.0;
    const auto tau = ThermalTime::from_temperature(T, kP);
    const double g = std::abs(gamma_oracle(t, 0.25, -0.25, osc, kP, T, budget));
    const double b = overlap_oracle(t, 0.25, -0.25, osc, kP, T, budget);
    CHECK(std::abs(g - std::exp(-0.5 * dX * dX * f_gamma(t, osc, tau, kP))) <= 1e-6);
    CHECK(std::abs(b - std::exp(-0.5 * dX * dX * f_b(t, osc, tau, kP))) <= 1e-5);
    CHECK(b >= g);
    CHECK(b <= 1.0);
    CHECK(b > 0.0);

    CHECK(std::abs(gamma_oracle(t, 0.3, 0.3, osc, kP, T, budget) - 1.0) <= 1e-8);
    CHECK(std::abs(overlap_oracle(t, 0.3, 0.3, osc, kP, T, budget) - 1.0) <= 1e-8);

    // Symmetry and rotation invariance.
    CHECK(overlap_oracle(t, -0.25, 0.25, osc, kP, T, budget) == doctest::Approx(b).epsilon(1e-10));
    CHECK(overlap_oracle(t, 0.25, -0.25, osc, kP, T, budget, false) == doctest::Approx(b).epsilon(1e-10));

    // Larger dimension moves the answer by less than 10x the budget.
    const TruncationBudget fine{1e-20, 800};
    CHECK(std::abs(overlap_oracle(t, 0.25, -0.25, osc, kP, T, fine) - b) <= 1e-9);
    CHECK(std::abs(std::abs(gamma_oracle(t, 0.25, -0.25, osc, kP, T, fine)) - g) <= 1e-9);
}

TEST_CASE("zero temperature reduces to coherent states") {
    const auto osc = make_osc(6.0);
    const double t = 2.1, X0 = 1.5, X0p = -0.5;
    const cd a = alpha(t, osc, kP);
    const double coherent = std::exp(-0.5 * std::norm(a * (X0 - X0p)));
    CHECK(std::abs(gamma_oracle(t, X0, X0p, osc, kP, 0.0)) == doctest::Approx(coherent).epsilon(1e-10));
    CHECK(overlap_oracle(t, X0, X0p, osc, kP, 0.0) == doctest::Approx(coherent).epsilon(1e-8));
}

TEST_CASE("generalized overlap of explicit matrices") {
    Eigen::MatrixXcd r1 = Eigen::MatrixXcd::Zero(2, 2);
    r1(0, 0) = 0.7;
    r1(1, 1) = 0.3;
    Eigen::MatrixXcd r2 = Eigen::MatrixXcd::Zero(2, 2);
    r2(0, 0) = 0.2;
    r2(1, 1) = 0.8;
    CHECK(generalized_overlap(r1, r2) == doctest::Approx(std::sqrt(0.14) + std::sqrt(0.24)).epsilon(1e-14));
    CHECK(generalized_overlap(r1, r1) == doctest::Approx(1.0).epsilon(1e-14));

    Eigen::MatrixXcd bad = r1;
    bad(1, 1) = -0.1;
    CHECK_THROWS_AS(generalized_overlap(bad, r2), NumericalInstability);
    Eigen::MatrixXcd tiny = r1;
    tiny(1, 1) = -1e-12;
    CHECK_NOTHROW(generalized_overlap(tiny, r2));
    CHECK_THROWS_AS(generalized_overlap(r1, Eigen::MatrixXcd::Identity(3, 3)), DomainError);
}

TEST_CASE("dimension rule and budget exhaustion") {
    const TruncationBudget b{1e-8, 1200};
    CHECK(b.thermal_dim(0.0) == 1);
    CHECK(std::pow(0.5, static_cast<double>(b.thermal_dim(1.0))) <= 1e-8);
    CHECK(b.dimension(1.0, 2.0) >= 4 * 4 + 20);
    const TruncationBudget tight{1e-10, 30};
    CHECK_THROWS_AS(overlap_oracle(0.7, 0.5, -0.5, make_osc(10.0), kP, 50.0, tight), TruncationError);
}
