// quadrature.cpp: Gauss-Kronrod 7/15 with a max-error priority queue

#include "qbm/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>

#include "qbm/errors.hpp"

namespace qbm {

namespace {

// Kronrod nodes (non-negative half) and weights; odd indices are Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * fsum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options) {
    if (!(b > a)) {
        if (a == b) return {};
        throw DomainError("integrate_adaptive: requires a <= b");
    }
    std::priority_queue<Segment> heap;
    double value = 0.0;
    double error = 0.0;
    const std::size_t n0 = options.initial_intervals == 0 ? 1 : options.initial_intervals;
    const double step = (b - a) / static_cast<double>(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        const double lo = a + step * static_cast<double>(i);
        const double hi = i + 1 == n0 ? b : lo + step;
        Segment s = gk15(f, lo, hi);
        value += s.value;
        error += s.error;
        heap.push(s);
    }
    auto converged = [&] { return error <= std::max(options.abs_tol, options.rel_tol * std::abs(value)); };
    while (!converged()) {
        if (heap.size() >= options.max_intervals) {
            throw QuadratureError("integrate_adaptive: no convergence within interval budget", value, error);
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw QuadratureError("integrate_adaptive: interval underflow", value, error);
        }
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to drop accumulated cancellation from the running updates.
    double total = 0.0;
    double total_err = 0.0;
    const std::size_t count = heap.size();
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    return {total, total_err, count};
}

}  // namespace qbm
