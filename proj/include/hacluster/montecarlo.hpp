#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hacluster/linalg.hpp"
#include "hacluster/model.hpp"
#include "hacluster/rng.hpp"

namespace hacluster {

enum class SimMode {
    SmpSemantics,  // state-5 deadline drawn fresh as U(0,T) on each entry
    PeriodicClock, // diagnostics fire at absolute times T, 2T, 3T, ...
};

std::string_view to_string(SimMode m);

struct SimConfig {
    ModelParams params;
    double horizon_hours = 1e6; // counted trajectory length per replication
    std::uint64_t seed = 1;
    SimMode mode = SimMode::SmpSemantics;
    int replications = 10;
    // Safety budget; a replication also ends after this many transitions.
    std::uint64_t max_transitions = UINT64_MAX;
};

struct SimResult {
    Vec6 occupancy{};             // time fraction per state, sums to 1
    double availability = 0.0;    // 1 - (occupancy[2] + occupancy[6])
    double ci_half_width = 0.0;   // 95% Student-t across replications (NaN if reps < 2)
    std::vector<double> replication_availability;
    std::array<std::array<std::uint64_t, kNumStates>, kNumStates> transitions{};
    SimMode mode = SimMode::SmpSemantics;
    std::uint64_t seed = 0;
    double horizon_hours = 0.0;
    int replications = 0;
    const char* rng_algorithm = "";
};

/// One transition out of `state` under SMP semantics.
struct Step {
    int next_state = 0; // 1-based
    double holding = 0.0;
};

Step step(const ModelParams& p, int state, Xoshiro256StarStar& rng);

/**
 * Runs the trajectory simulation and aggregates replications. Each
 * replication starts in state 1, discards its first sojourn, then
 * accumulates per-state time until `horizon_hours` of counted time (the
 * final sojourn is truncated at the horizon). Deterministic for a given
 * (seed, mode, params, horizon, replications). Dispatches on cfg.mode.
 */
SimResult simulate(const SimConfig& cfg);

/// Periodic-diagnostic variant: a latent standby fault is detected at the
/// next absolute multiple of T. Ticks are no-ops in every other state.
/// Requires cfg.mode == PeriodicClock.
SimResult simulate_periodic(const SimConfig& cfg);

/// 0.975 Student-t quantile used for the replication CI.
double student_t_975(int degrees_of_freedom);

} // namespace hacluster
