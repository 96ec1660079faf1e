// fock_oracle.cpp: Thermal states, displacements and overlaps in a truncated Fock basis

#include "qbm/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qbm/errors.hpp"

namespace qbm {

namespace {

constexpr double kClipTolerance = -1e-9;

// Rows reached by D(alpha) acting on |n>, n < dim: about (sqrt(dim) + |alpha|)^2.
std::size_t padded_dim(double abs_alpha, std::size_t dim) {
    const double reach = std::sqrt(static_cast<double>(dim)) + abs_alpha + 8.0;
    return std::max<std::size_t>(dim + 16, static_cast<std::size_t>(std::ceil(reach * reach)) + 16);
}

// D(alpha) = Q exp(-i |alpha| X) Q^dag, X = a + a^dag, Q = diag(e^{i n (phi + pi/2)}).
Eigen::MatrixXcd displacement_padded(std::complex<double> alpha, std::size_t pad) {
    const auto n = static_cast<Eigen::Index>(pad);
    const double r = std::abs(alpha);
    if (r == 0.0) return Eigen::MatrixXcd::Identity(n, n);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) sub(k) = std::sqrt(static_cast<double>(k + 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd& V = es.eigenvectors();
    Eigen::VectorXcd phase(n);
    for (Eigen::Index k = 0; k < n; ++k) phase(k) = std::polar(1.0, -r * es.eigenvalues()(k));
    Eigen::MatrixXcd out = (V.cast<std::complex<double>>() * phase.asDiagonal()) * V.transpose();
    const double theta = std::arg(alpha) + 0.5 * std::numbers::pi;
    Eigen::VectorXcd q(n);
    for (Eigen::Index k = 0; k < n; ++k) q(k) = std::polar(1.0, theta * static_cast<double>(k));
    return q.asDiagonal() * out * q.conjugate().asDiagonal();
}

Eigen::VectorXd thermal_populations(double nbar, std::size_t dim) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(dim));
    const double ratio = nbar / (nbar + 1.0);
    double pn = 1.0 / (nbar + 1.0);
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        p(k) = pn;
        pn *= ratio;
    }
    return p;
}

struct Branch {
    FockState state;
    Eigen::MatrixXcd displaced_columns;  // padded rows, first dim columns
    Eigen::VectorXd populations;
};

Branch build_branch(std::complex<double> beta, double nbar, std::size_t dim) {
    const std::size_t pad = padded_dim(std::abs(beta), dim);
    const Eigen::MatrixXcd Dp = displacement_padded(beta, pad);
    Branch b;
    b.populations = thermal_populations(nbar, dim);
    const auto d = static_cast<Eigen::Index>(dim);
    b.displaced_columns = Dp.leftCols(d);
    const Eigen::MatrixXcd top = Dp.topLeftCorner(d, d);
    b.state.dim = dim;
    b.state.matrix = top * b.populations.cast<std::complex<double>>().asDiagonal() * top.adjoint();
    b.state.trace_deficit = std::max(0.0, 1.0 - b.state.matrix.trace().real());
    return b;
}

void rotate_in_place(Eigen::MatrixXcd& rho, double omega, double t) {
    const auto n = rho.rows();
    Eigen::VectorXcd r(n);
    for (Eigen::Index k = 0; k < n; ++k) r(k) = std::polar(1.0, -omega * t * static_cast<double>(k));
    rho = r.asDiagonal() * rho * r.conjugate().asDiagonal();
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw NumericalInstability("eigendecomposition failed");
    Eigen::VectorXd lam = es.eigenvalues();
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        if (lam(k) < kClipTolerance) {
            throw NumericalInstability("matrix not positive semidefinite: eigenvalue " + std::to_string(lam(k)));
        }
        lam(k) = std::sqrt(std::max(0.0, lam(k)));
    }
    return es.eigenvectors() * lam.cast<std::complex<double>>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

std::size_t TruncationBudget::thermal_dim(double nbar) const {
    if (nbar <= 0.0) return 1;
    const double d = std::log(1.0 / max_trace_deficit) / std::log1p(1.0 / nbar);
    return static_cast<std::size_t>(std::ceil(d));
}

std::size_t TruncationBudget::dimension(double nbar, double max_abs_displacement) const {
    const double rule = std::max(nbar * std::log(1.0 / max_trace_deficit), static_cast<double>(thermal_dim(nbar)));
    return static_cast<std::size_t>(std::ceil(rule + 4.0 * max_abs_displacement * max_abs_displacement + 20.0));
}

double thermal_occupation(double omega, double T, const ModelParams& params) {
    if (!(T >= 0.0)) throw DomainError("thermal_occupation: T must be >= 0");
    if (T == 0.0) return 0.0;
    return 1.0 / std::expm1(params.hbar * omega / (params.kB * T));
}

FockState thermal_state(double nbar, std::size_t dim, const TruncationBudget& budget) {
    if (!(nbar >= 0.0)) throw DomainError("thermal_state: nbar must be >= 0");
    if (dim == 0) throw DomainError("thermal_state: dim must be >= 1");
    FockState s;
    s.dim = dim;
    s.matrix = thermal_populations(nbar, dim).cast<std::complex<double>>().asDiagonal();
    s.trace_deficit = nbar == 0.0 ? 0.0 : std::pow(nbar / (nbar + 1.0), static_cast<double>(dim));
    if (s.trace_deficit > budget.max_trace_deficit) {
        throw TruncationError("thermal_state: dimension too small for truncation budget", s.trace_deficit, dim);
    }
    return s;
}

Eigen::MatrixXcd displacement(std::complex<double> alpha, std::size_t dim) {
    if (dim == 0) throw DomainError("displacement: dim must be >= 1");
    if (std::norm(alpha) > static_cast<double>(dim) / 10.0) {
        throw TruncationError("displacement: |alpha|^2 exceeds dim/10", std::norm(alpha), dim);
    }
    const auto d = static_cast<Eigen::Index>(dim);
    return displacement_padded(alpha, padded_dim(std::abs(alpha), dim)).topLeftCorner(d, d);
}

namespace {

template <class Fn>
auto with_adaptive_dim(double nbar, double max_disp, const TruncationBudget& budget, Fn&& fn) {
    std::size_t dim = budget.dimension(nbar, max_disp);
    for (;;) {
        if (dim > budget.max_dim) {
            throw TruncationError("fock oracle: required dimension exceeds max_dim", budget.max_trace_deficit, dim);
        }
        auto [value, deficit] = fn(dim);
        if (deficit <= 10.0 * budget.max_trace_deficit) return value;
        const std::size_t next = dim + dim / 2;
        if (next > budget.max_dim) {
            throw TruncationError("fock oracle: trace deficit above budget at max_dim", deficit, dim);
        }
        dim = next;
    }
}

}  // namespace

FockState evolved_state(double X0, double t, const Oscillator& osc, const ModelParams& params, double T,
                        const TruncationBudget& budget, bool rotate) {
    const std::complex<double> beta = alpha(t, osc, params) * X0;
    const double nbar = thermal_occupation(osc.omega, T, params);
    return with_adaptive_dim(nbar, std::abs(beta), budget, [&](std::size_t dim) {
        Branch b = build_branch(beta, nbar, dim);
        if (rotate) rotate_in_place(b.state.matrix, osc.omega, t);
        const double deficit = b.state.trace_deficit;
        return std::pair{std::move(b.state), deficit};
    });
}

std::complex<double> gamma_oracle(double t, double X0, double X0p, const Oscillator& osc, const ModelParams& params,
                                  double T, const TruncationBudget& budget) {
    const std::complex<double> a = alpha(t, osc, params);
    const std::complex<double> b1 = a * X0;
    const std::complex<double> b2 = a * X0p;
    const double nbar = thermal_occupation(osc.omega, T, params);
    const double reach = std::max(std::abs(b1), std::abs(b2));
    return with_adaptive_dim(nbar, reach, budget, [&](std::size_t dim) {
        // The common rotation cancels under the trace; sum_n p_n <n| D2^dag D1 |n>.
        const std::size_t pad = padded_dim(reach, dim);
        const auto d = static_cast<Eigen::Index>(dim);
        const Eigen::MatrixXcd D1 = displacement_padded(b1, pad).leftCols(d);
        const Eigen::MatrixXcd D2 = displacement_padded(b2, pad).leftCols(d);
        const Eigen::VectorXd p = thermal_populations(nbar, dim);
        std::complex<double> g = 0.0;
        for (Eigen::Index n = 0; n < d; ++n) g += p(n) * D2.col(n).dot(D1.col(n));
        const double deficit = 1.0 - p.sum();
        return std::pair{g, std::max(0.0, deficit)};
    });
}

double overlap_oracle(double t, double X0, double X0p, const Oscillator& osc, const ModelParams& params, double T,
                      const TruncationBudget& budget, bool rotate) {
    const std::complex<double> a = alpha(t, osc, params);
    const double nbar = thermal_occupation(osc.omega, T, params);
    const double reach = std::abs(a) * std::max(std::abs(X0), std::abs(X0p));
    return with_adaptive_dim(nbar, reach, budget, [&](std::size_t dim) {
        Branch r1 = build_branch(a * X0, nbar, dim);
        Branch r2 = build_branch(a * X0p, nbar, dim);
        if (rotate) {
            rotate_in_place(r1.state.matrix, osc.omega, t);
            rotate_in_place(r2.state.matrix, osc.omega, t);
        }
        const double deficit = std::max(r1.state.trace_deficit, r2.state.trace_deficit);
        return std::pair{generalized_overlap(r1.state.matrix, r2.state.matrix), deficit};
    });
}

double generalized_overlap(const Eigen::MatrixXcd& r1, const Eigen::MatrixXcd& r2) {
    if (r1.rows() != r1.cols() || r1.rows() != r2.rows() || r2.rows() != r2.cols()) {
        throw DomainError("generalized_overlap: matrices must be square and of equal size");
    }
    const Eigen::MatrixXcd s1 = psd_sqrt(0.5 * (r1 + r1.adjoint()));
    Eigen::MatrixXcd m = s1 * r2 * s1;
    m = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalInstability("eigendecomposition failed");
    double tr = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double lam = es.eigenvalues()(k);
        if (lam < kClipTolerance) {
            throw NumericalInstability("matrix not positive semidefinite: eigenvalue " + std::to_string(lam));
        }
        tr += std::sqrt(std::max(0.0, lam));
    }
    return tr;
}

}  // namespace qbm
