// fock_oracle.hpp: Truncated Fock-space density matrices for one bath mode
//
// Independent check of the per-oscillator indicators: states are built from the
// thermal distribution, displaced by D(alpha X0) and rotated by e^{-iHt}, then
// compared by trace overlap and by the generalized overlap tr sqrt(sqrt(r1) r2 sqrt(r1)).

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qbm/core_params.hpp"
#include "qbm/indicators.hpp"

namespace qbm {

struct TruncationBudget {
    double max_trace_deficit{1e-8};
    std::size_t max_dim{1200};

    // Smallest dim whose geometric thermal tail is <= max_trace_deficit.
    std::size_t thermal_dim(double nbar) const;
    // max(nbar ln(1/budget), thermal_dim) + 4 |alpha X|^2 + 20
    std::size_t dimension(double nbar, double max_abs_displacement) const;
};

struct FockState {
    std::size_t dim{0};
    Eigen::MatrixXcd matrix;
    double trace_deficit{0.0};
};

// 1 / (e^{hbar omega / kB T} - 1); 0 at T = 0.
double thermal_occupation(double omega, double T, const ModelParams& params);

// Diagonal state p_n = (1 - q) q^n, q = nbar/(nbar+1), normalized over all n so
// trace_deficit is the exact tail. Throws TruncationError if the tail exceeds the budget.
FockState thermal_state(double nbar, std::size_t dim, const TruncationBudget& budget = {});

// exp(alpha a^dag - alpha^* a) on the first dim levels. Computed on a padded
// space from the tridiagonal quadrature operator and cropped. Requires |alpha|^2 <= dim/10.
Eigen::MatrixXcd displacement(std::complex<double> alpha, std::size_t dim);

// e^{-iHt} D(alpha(t) X0) rho_th D^dag e^{iHt}. The dimension is chosen by the budget
// and enlarged until the trace deficit is within 10x the budget.
FockState evolved_state(double X0, double t, const Oscillator& osc, const ModelParams& params, double T,
                        const TruncationBudget& budget = {}, bool rotate = true);

// tr[U(X0) rho_th U(X0p)^dag] without the X0-dependent global phase.
std::complex<double> gamma_oracle(double t, double X0, double X0p, const Oscillator& osc, const ModelParams& params,
                                  double T, const TruncationBudget& budget = {});

double overlap_oracle(double t, double X0, double X0p, const Oscillator& osc, const ModelParams& params, double T,
                      const TruncationBudget& budget = {}, bool rotate = true);

// tr sqrt(sqrt(r1) r2 sqrt(r1)) for Hermitian PSD inputs of equal size. Eigenvalues
// below -1e-9 raise NumericalInstability; smaller negatives are clipped to 0.
double generalized_overlap(const Eigen::MatrixXcd& r1, const Eigen::MatrixXcd& r2);

}  // namespace qbm
