#pragma once

#include "hacluster/errors.hpp"

namespace hacluster {

/**
 * Holding-time law of one state, per visit. Two shapes occur in this model:
 * a plain exponential at the state's total exit rate, and the minimum of an
 * exponential failure time and an independent uniform diagnostic deadline on
 * [0, T] (the latent-fault state).
 */
struct SojournDistribution {
    enum class Kind { Exponential, ExpUniformMin };

    int state = 0;
    Kind kind = Kind::Exponential;
    double rate = 0.0;     // exponential rate; for ExpUniformMin, the exponential leg
    double deadline = 0.0; // T, only meaningful for ExpUniformMin

    double cdf(double t) const;
    double survival(double t) const; // 1 - cdf, computed without cancellation
};

/**
 * Numeric mean sojourn time: integral of survival(t) over [0, upper] by
 * composite Simpson with 2e4 panels. Used to validate the analytic means.
 * `upper` must absorb the tail: survival(upper) <= 1e-9 or ConvergenceError
 * is thrown. For ExpUniformMin the integrand vanishes beyond the deadline,
 * so integration stops there.
 */
double integrate_tail(const SojournDistribution& d, double upper);

} // namespace hacluster
