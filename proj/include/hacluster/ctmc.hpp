#pragma once

#include "hacluster/linalg.hpp"
#include "hacluster/model.hpp"

namespace hacluster {

/**
 * Infinitesimal generator of the approximate continuous-time chain, where
 * the wait for the next diagnostic is taken exponential with mean T/2
 * (rate 2/T). Off-diagonals are the transition rates of the six-state
 * model; diagonals make each row sum to zero.
 */
struct GeneratorMatrix {
    Matrix6 q{};
    ModelParams params;

    /// 1-based rate accessor: rate(i, j) is the i -> j transition rate.
    double rate(int from, int to) const {
        return q[static_cast<size_t>(from - 1)][static_cast<size_t>(to - 1)];
    }
};

GeneratorMatrix build_generator(const ModelParams& p);

/// Steady state from the balance equations pi * Q = 0, sum(pi) = 1, solved
/// numerically. Source tag: CtmcNumeric.
SteadyState ctmc_steady_state_numeric(const GeneratorMatrix& g);

/// Steady state from the closed-form per-state ratios (see docs/MODEL.md),
/// normalized. Source tag: CtmcClosed. Agrees with the numeric solution to
/// better than 1e-9 relative per state.
SteadyState ctmc_steady_state_closed_form(const ModelParams& p);

} // namespace hacluster
