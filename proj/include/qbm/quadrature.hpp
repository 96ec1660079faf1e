// quadrature.hpp: Adaptive Gauss-Kronrod (7/15) integration on a finite interval

#pragma once

#include <cstddef>
#include <functional>

namespace qbm {

struct QuadratureResult {
    double value{0.0};
    double error_estimate{0.0};
    std::size_t intervals{0};
};

struct QuadratureOptions {
    double rel_tol{1e-10};
    double abs_tol{0.0};
    std::size_t max_intervals{20000};
    // Initial uniform split; useful for oscillatory integrands.
    std::size_t initial_intervals{1};
};

// Globally adaptive: the interval with the largest error is bisected until
// error <= max(abs_tol, rel_tol * |value|). Throws QuadratureError if the
// interval budget is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

}  // namespace qbm
