#pragma once

#include <array>
#include <string_view>

#include "hacluster/errors.hpp"

namespace hacluster {

inline constexpr int kNumStates = 6;

/**
 * Rates and probabilities of the two-unit active/standby cluster model.
 * All rates are per hour, T is in hours.
 *
 * Defaults are the reference operating point used throughout the test
 * suite and as CLI fallback values: lambda = 0.001/h with the standby
 * failing at a quarter of that rate, one-hour mean restoration, five-minute
 * mean reboot, 90% coverage on both units, weekly diagnostic.
 */
struct ModelParams {
    double lambda_active = 0.001;    // failure rate of the active unit
    double lambda_standby = 0.00025; // failure rate of the standby unit
    double mu = 1.0;                 // restoration rate of a failed unit
    double beta = 12.0;              // reboot rate
    double c = 0.9;                  // coverage probability, active unit
    double c_s = 0.9;                // coverage probability, standby unit
    double T = 168.0;                // diagnostic interval for latent standby faults
};

/// Returns p unchanged, or throws ValidationError naming the first violated
/// invariant ("c out of [0,1]", "T must be positive", ...).
ModelParams validate_params(const ModelParams& p);

/// validate_params plus the lambda_active > 0 requirement of the
/// semi-Markov solver (the embedded kernel divides by lambda).
ModelParams validate_smp_params(const ModelParams& p);

/// States are numbered 1..6. The system is down in states 2 and 6.
bool is_down(int state);

/// Short role description of a state, for reports.
std::string_view state_description(int state);

enum class Source {
    CtmcNumeric,
    CtmcClosed,
    SmpNumeric,
    SmpClosed,
    Simulated,
};

std::string_view to_string(Source s);

/// Long-run probability of each of the six states, tagged with the solver
/// that produced it. Analytic sources sum to 1 within 1e-12.
struct SteadyState {
    std::array<double, kNumStates> probs{};
    Source source = Source::CtmcNumeric;

    /// 1-based accessor matching the state numbering.
    double prob(int state) const { return probs[static_cast<size_t>(state - 1)]; }
};

} // namespace hacluster
