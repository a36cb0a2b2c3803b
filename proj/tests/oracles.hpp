#pragma once

// Reference implementations used only by tests. They deliberately take
// different routes than the library (adaptive instead of fixed-panel
// quadrature, fixed-point iteration instead of elimination) so the two
// sides can check each other.

#include <cmath>
#include <cstdlib>

#include "hacluster/linalg.hpp"

namespace oracles {

namespace detail {

inline double simpson_estimate(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_step(F&& f, double a, double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_estimate(a, fa, m, fm, flm);
    const double right = simpson_estimate(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

} // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol) {
    const double m = (a + b) / 2.0;
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = detail::simpson_estimate(a, fa, b, fb, fm);
    return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

// P(X > Y) for X ~ Exp(lambda), Y ~ U(0,T) as a genuine nested integral:
// outer over the uniform density, inner over the exponential density tail.
inline double race_probability_by_quadrature(double lambda, double T) {
    const auto inner = [lambda](double t) {
        const double upper = t + 60.0 / lambda;
        return adaptive_simpson(
            [lambda](double x) { return lambda * std::exp(-lambda * x); }, t, upper, 1e-14);
    };
    return adaptive_simpson([&](double t) { return inner(t) / T; }, 0.0, T, 1e-13);
}

// v <- vP until the max component change drops below 1e-13 (or 1e6 sweeps).
inline hacluster::Vec6 power_iteration_stationary(const hacluster::Matrix6& p) {
    hacluster::Vec6 v{};
    v.fill(1.0 / 6.0);
    for (long iter = 0; iter < 1000000; ++iter) {
        hacluster::Vec6 next{};
        for (int j = 0; j < 6; ++j)
            for (int i = 0; i < 6; ++i) next[j] += v[i] * p[i][j];
        double sum = 0.0;
        for (double x : next) sum += x;
        for (double& x : next) x /= sum;
        double delta = 0.0;
        for (int i = 0; i < 6; ++i) delta = std::max(delta, std::abs(next[i] - v[i]));
        v = next;
        if (delta < 1e-13) break;
    }
    return v;
}

} // namespace oracles
