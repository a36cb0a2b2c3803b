#pragma once

#include <array>

#include "hacluster/linalg.hpp"
#include "hacluster/model.hpp"
#include "hacluster/sojourn.hpp"

namespace hacluster {

/// P(X > Y) for X ~ Exp(lambda), Y ~ U(0, T): the probability that the
/// diagnostic deadline fires before the exponential failure. Equals
/// (1/(lambda*T)) * (1 - exp(-lambda*T)), evaluated stably for small
/// lambda*T.
double exp_outlasts_uniform(double lambda, double T);

/**
 * The chain embedded at transition instants: one-step transition matrix
 * (zero diagonal, rows sum to 1) plus the per-state sojourn laws.
 */
struct EmbeddedChain {
    Matrix6 p{};
    std::array<SojournDistribution, kNumStates> sojourns{};
    ModelParams params;

    double prob(int from, int to) const {
        return p[static_cast<size_t>(from - 1)][static_cast<size_t>(to - 1)];
    }
};

EmbeddedChain embedded_matrix(const ModelParams& p);

/// Mean time spent per visit in each state (integral of the sojourn
/// survival function; all six have closed forms).
Vec6 mean_sojourn_times(const ModelParams& p);

/// Stationary law v = vP of the embedded chain, sum(v) = 1.
Vec6 embedded_stationary(const EmbeddedChain& ec);

/// Semi-Markov state probabilities pi_i = v_i h_i / sum_j v_j h_j with v
/// solved numerically. Source tag: SmpNumeric.
SteadyState smp_state_probabilities(const ModelParams& p);

/// Same law with v taken from the closed-form visit ratios (docs/MODEL.md).
/// Source tag: SmpClosed.
SteadyState smp_state_probabilities_closed_form(const ModelParams& p);

} // namespace hacluster
