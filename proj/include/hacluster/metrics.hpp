#pragma once

#include <vector>

#include "hacluster/model.hpp"
#include "hacluster/montecarlo.hpp"

namespace hacluster {

inline constexpr double kMinutesPerYear = 525600.0; // 365-day year

enum class Model { Ctmc, Smp };
enum class Method { Numeric, Closed };

std::string_view to_string(Model m);

/// Long-run fraction of time in up states: 1 - (pi_2 + pi_6).
double availability(const SteadyState& ss);

/// (1 - a) * 525600.
double downtime_minutes_per_year(double a);

struct AvailabilityReport {
    double availability_value = 0.0;
    double downtime_min_per_year = 0.0;
    SteadyState state_probs;
    Model model = Model::Smp;
    ModelParams params;
};

/// Solves one model with the chosen route and assembles the report.
AvailabilityReport solve_model(const ModelParams& p, Model model,
                               Method method = Method::Numeric);

struct SweepRow {
    double ratio = 0.0; // mu / lambda
    ModelParams params;
    double availability_ctmc = 0.0;
    double availability_smp = 0.0;
    double downtime_ctmc = 0.0; // minutes per year
    double downtime_smp = 0.0;
    double difference = 0.0; // downtime_smp - downtime_ctmc
};

struct SweepResult {
    std::vector<double> axis; // strictly increasing mu/lambda ratios
    std::vector<SweepRow> rows;
};

/// Downtime sweep over mu/lambda ratios with mu = 1/h, beta = 12/h,
/// c = c_s = 0.9 fixed and lambda_standby = lambda/4; both models are
/// solved numerically at each point. Downtime of each model is
/// nonincreasing along the (strictly increasing) ratio axis.
SweepResult fig3_sweep(const std::vector<double>& ratios, double T);

/// 40 log-spaced ratios covering [1e2, 1e6].
std::vector<double> default_ratio_grid();

struct PairCheck {
    Source a = Source::CtmcNumeric;
    Source b = Source::CtmcNumeric;
    double max_rel_diff = 0.0;
    double tolerance = 0.0;
    bool gating = true; // cross-model comparisons are informative only
    bool pass = true;
};

struct ValidationReport {
    ModelParams params;
    std::array<SteadyState, 4> analytic{}; // ctmc num/closed, smp num/closed
    std::vector<PairCheck> pairs;
    SimResult sim;
    double smp_availability = 0.0;
    bool sim_within_ci = false;
    bool passed = false;
};

/// Largest per-state relative difference between two steady states
/// (|a-b| / max(|a|,|b|); states where both are zero contribute 0).
double max_rel_diff(const SteadyState& a, const SteadyState& b);

/// Comparison core of validate_all, separated so arbitrary (including
/// deliberately corrupted) solutions can be assessed in tests.
ValidationReport assess_solutions(const ModelParams& p,
                                  const std::array<SteadyState, 4>& analytic,
                                  const SimResult& sim, double tol);

/// Runs all five sources (four analytic solvers plus the simulator) and
/// reports pairwise agreement. Passes when each closed/numeric pair agrees
/// within `tol` per state and the analytic SMP availability lies inside the
/// simulation's 95% CI.
ValidationReport validate_all(const ModelParams& p, const SimConfig& simcfg,
                              double tol = 1e-9);

} // namespace hacluster
