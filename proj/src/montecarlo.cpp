#include "hacluster/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hacluster {

std::string_view to_string(SimMode m) {
    return m == SimMode::SmpSemantics ? "smp" : "periodic";
}

double student_t_975(int df) {
    // Two-sided 95% quantiles; beyond the table the normal value is close
    // enough for replication counts this tool runs.
    static constexpr double table[] = {
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
        2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
        2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
    if (df < 1) return std::numeric_limits<double>::quiet_NaN();
    if (df <= 30) return table[df - 1];
    if (df <= 40) return 2.021;
    if (df <= 60) return 2.000;
    if (df <= 120) return 1.980;
    return 1.960;
}

Step step(const ModelParams& p, int state, Xoshiro256StarStar& rng) {
    switch (state) {
        case 1: {
            const double active = rng.exponential(p.lambda_active);
            const double standby = rng.exponential(p.lambda_standby);
            if (active < standby) return {rng.bernoulli(p.c) ? 3 : 2, active};
            return {rng.bernoulli(p.c_s) ? 4 : 5, standby};
        }
        case 2: {
            const double reboot = rng.exponential(p.beta);
            const double standby = rng.exponential(p.lambda_standby);
            if (reboot < standby) return {3, reboot};
            return {6, standby};
        }
        case 3: {
            const double repair = rng.exponential(p.mu);
            const double survivor = rng.exponential(p.lambda_standby);
            if (repair < survivor) return {1, repair};
            return {6, survivor};
        }
        case 4: {
            const double repair = rng.exponential(p.mu);
            const double survivor = rng.exponential(p.lambda_active);
            if (repair < survivor) return {1, repair};
            return {6, survivor};
        }
        case 5: {
            const double fail = rng.exponential(p.lambda_active);
            const double diagnostic = rng.uniform(p.T);
            if (diagnostic < fail) return {4, diagnostic};
            return {6, fail};
        }
        case 6: {
            const double first = rng.exponential(p.mu);
            const double second = rng.exponential(p.mu);
            if (first < second) return {3, first};
            return {4, second};
        }
        default:
            throw ValidationError("state index out of 1..6");
    }
}

namespace {

struct Replication {
    Vec6 state_time{};
    std::array<std::array<std::uint64_t, kNumStates>, kNumStates> transitions{};
    double availability = 0.0;
};

// Periodic mode replaces the state-5 draw with the wall-clock wait to the
// next diagnostic tick; everything else is memoryless and identical.
Step periodic_step(const ModelParams& p, int state, double wall_time,
                   Xoshiro256StarStar& rng) {
    if (state != 5) return step(p, state, rng);
    const double next_tick = (std::floor(wall_time / p.T) + 1.0) * p.T;
    const double wait = next_tick - wall_time;
    const double fail = rng.exponential(p.lambda_active);
    if (fail < wait) return {6, fail};
    return {4, wait};
}

Replication run_replication(const SimConfig& cfg, int rep_index) {
    const ModelParams& p = cfg.params;
    auto rng = Xoshiro256StarStar::for_replication(cfg.seed, rep_index);
    const bool periodic = cfg.mode == SimMode::PeriodicClock;

    Replication out;
    int state = 1;
    double wall = 0.0;

    // First sojourn is discarded to reduce initialization bias.
    {
        const Step first = periodic ? periodic_step(p, state, wall, rng) : step(p, state, rng);
        wall += first.holding;
        state = first.next_state;
    }

    double counted = 0.0;
    std::uint64_t n_transitions = 0;
    while (counted < cfg.horizon_hours && n_transitions < cfg.max_transitions) {
        const Step s = periodic ? periodic_step(p, state, wall, rng) : step(p, state, rng);
        const double remaining = cfg.horizon_hours - counted;
        if (!(s.holding < remaining)) {
            out.state_time[state - 1] += remaining;
            counted = cfg.horizon_hours;
            break; // horizon hit mid-sojourn; the cut transition is not counted
        }
        out.state_time[state - 1] += s.holding;
        counted += s.holding;
        wall += s.holding;
        ++out.transitions[state - 1][s.next_state - 1];
        ++n_transitions;
        state = s.next_state;
    }

    const double total = out.state_time[0] + out.state_time[1] + out.state_time[2] +
                         out.state_time[3] + out.state_time[4] + out.state_time[5];
    out.availability = 1.0 - (out.state_time[1] + out.state_time[5]) / total;
    return out;
}

SimResult run(const SimConfig& cfg) {
    validate_params(cfg.params);
    if (!(cfg.horizon_hours > 0)) throw ValidationError("horizon must be positive");
    if (cfg.replications < 1) throw ValidationError("replications must be >= 1");

    SimResult r;
    r.mode = cfg.mode;
    r.seed = cfg.seed;
    r.horizon_hours = cfg.horizon_hours;
    r.replications = cfg.replications;
    r.rng_algorithm = Xoshiro256StarStar::kAlgorithm;

    Vec6 total_time{};
    std::vector<double> rep_avail(static_cast<size_t>(cfg.replications));
    for (int rep = 0; rep < cfg.replications; ++rep) {
        const Replication one = run_replication(cfg, rep);
        for (int i = 0; i < kNumStates; ++i) {
            total_time[i] += one.state_time[i];
            for (int j = 0; j < kNumStates; ++j) r.transitions[i][j] += one.transitions[i][j];
        }
        rep_avail[static_cast<size_t>(rep)] = one.availability;
    }

    double grand_total = 0.0;
    for (double t : total_time) grand_total += t;
    for (int i = 0; i < kNumStates; ++i) r.occupancy[i] = total_time[i] / grand_total;
    r.availability = 1.0 - (r.occupancy[1] + r.occupancy[5]);
    r.replication_availability = rep_avail;

    if (cfg.replications >= 2) {
        const auto n = static_cast<double>(cfg.replications);
        double mean = 0.0;
        for (double a : rep_avail) mean += a;
        mean /= n;
        double ss = 0.0;
        for (double a : rep_avail) ss += (a - mean) * (a - mean);
        const double stderr_mean = std::sqrt(ss / (n - 1) / n);
        r.ci_half_width = student_t_975(cfg.replications - 1) * stderr_mean;
    } else {
        r.ci_half_width = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

} // namespace

SimResult simulate(const SimConfig& cfg) { return run(cfg); }

SimResult simulate_periodic(const SimConfig& cfg) {
    if (cfg.mode != SimMode::PeriodicClock)
        throw ValidationError("simulate_periodic requires periodic-clock mode");
    return run(cfg);
}

} // namespace hacluster
