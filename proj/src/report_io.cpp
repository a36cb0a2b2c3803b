#include "hacluster/report_io.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace hacluster {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

void param_lines(std::ostream& os, const ModelParams& p) {
    os << "# lambda=" << format_double(p.lambda_active) << '\n';
    os << "# lambda_s=" << format_double(p.lambda_standby) << '\n';
    os << "# mu=" << format_double(p.mu) << '\n';
    os << "# beta=" << format_double(p.beta) << '\n';
    os << "# c=" << format_double(p.c) << '\n';
    os << "# c_s=" << format_double(p.c_s) << '\n';
    os << "# T=" << format_double(p.T) << '\n';
}

std::string params_inline(const ModelParams& p) {
    std::ostringstream os;
    os << "lambda=" << format_double(p.lambda_active)
       << " lambda_s=" << format_double(p.lambda_standby) << " mu=" << format_double(p.mu)
       << " beta=" << format_double(p.beta) << " c=" << format_double(p.c)
       << " c_s=" << format_double(p.c_s) << " T=" << format_double(p.T);
    return os.str();
}

void pad(std::ostream& os, const std::string& s, size_t width) {
    os << s;
    for (size_t i = s.size(); i < width; ++i) os << ' ';
}

} // namespace

std::string manifest_header(const RunManifest& m) {
    std::ostringstream os;
    os << "# command=" << m.command << '\n';
    os << "# version=" << m.version << '\n';
    param_lines(os, m.params);
    if (m.seed) os << "# seed=" << *m.seed << '\n';
    for (const auto& out : m.outputs) os << "# output=" << out << '\n';
    return os.str();
}

void write_solve_csv(std::ostream& os, const AvailabilityReport& r, const RunManifest& m) {
    os << manifest_header(m);
    os << "# model=" << to_string(r.model) << '\n';
    os << "# source=" << to_string(r.state_probs.source) << '\n';
    os << "# availability=" << format_double(r.availability_value) << '\n';
    os << "# downtime_min_per_year=" << format_double(r.downtime_min_per_year) << '\n';
    os << "state,probability,down\n";
    for (int s = 1; s <= kNumStates; ++s)
        os << s << ',' << format_double(r.state_probs.prob(s)) << ',' << (is_down(s) ? 1 : 0)
           << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& r, const RunManifest& m) {
    os << manifest_header(m);
    os << "ratio,lambda,lambda_s,downtime_ctmc_min_yr,downtime_smp_min_yr,difference_min_yr\n";
    for (const SweepRow& row : r.rows) {
        os << format_double(row.ratio) << ',' << format_double(row.params.lambda_active) << ','
           << format_double(row.params.lambda_standby) << ','
           << format_double(row.downtime_ctmc) << ',' << format_double(row.downtime_smp) << ','
           << format_double(row.difference) << '\n';
    }
}

void write_simulate_csv(std::ostream& os, const SimResult& r, const RunManifest& m) {
    os << manifest_header(m);
    os << "# mode=" << to_string(r.mode) << '\n';
    os << "# rng=" << r.rng_algorithm << '\n';
    os << "# horizon_hours=" << format_double(r.horizon_hours) << '\n';
    os << "# replications=" << r.replications << '\n';
    os << "# availability=" << format_double(r.availability) << '\n';
    os << "# ci_half_width=" << format_double(r.ci_half_width) << '\n';
    for (size_t i = 0; i < r.replication_availability.size(); ++i)
        os << "# availability_rep_" << i << '='
           << format_double(r.replication_availability[i]) << '\n';
    os << "state,occupancy,down\n";
    for (int s = 1; s <= kNumStates; ++s)
        os << s << ',' << format_double(r.occupancy[static_cast<size_t>(s - 1)]) << ','
           << (is_down(s) ? 1 : 0) << '\n';
}

void write_validate_csv(std::ostream& os, const ValidationReport& r, const RunManifest& m) {
    os << manifest_header(m);
    os << "check,pair,difference,threshold,gating,pass\n";
    for (const PairCheck& pc : r.pairs) {
        os << "state-probs," << to_string(pc.a) << '/' << to_string(pc.b) << ','
           << format_double(pc.max_rel_diff) << ',' << format_double(pc.tolerance) << ','
           << (pc.gating ? 1 : 0) << ',' << (pc.pass ? 1 : 0) << '\n';
    }
    os << "availability-ci,simulated/smp-numeric,"
       << format_double(std::abs(r.sim.availability - r.smp_availability)) << ','
       << format_double(r.sim.ci_half_width) << ",1," << (r.sim_within_ci ? 1 : 0) << '\n';
}

void print_solve_report(std::ostream& os, const AvailabilityReport& r) {
    os << "model: " << to_string(r.model) << " (" << to_string(r.state_probs.source) << ")\n";
    os << "parameters: " << params_inline(r.params) << "\n\n";
    os << "state  probability              description\n";
    for (int s = 1; s <= kNumStates; ++s) {
        os << "    " << s << "  ";
        pad(os, format_double(r.state_probs.prob(s)), 25);
        os << state_description(s);
        if (is_down(s)) os << " [down]";
        os << '\n';
    }
    os << '\n';
    os << "availability:        " << format_double(r.availability_value) << '\n';
    os << "downtime (min/year): " << format_double(r.downtime_min_per_year) << '\n';
}

void print_sweep_table(std::ostream& os, const SweepResult& r) {
    os << "ratio (mu/lambda)      downtime_ctmc (min/yr)  downtime_smp (min/yr)   "
          "difference (min/yr)\n";
    for (const SweepRow& row : r.rows) {
        pad(os, format_double(row.ratio), 23);
        pad(os, format_double(row.downtime_ctmc), 24);
        pad(os, format_double(row.downtime_smp), 24);
        os << format_double(row.difference) << '\n';
    }
}

void print_simulate_report(std::ostream& os, const SimResult& r, double analytic_smp) {
    os << "simulation: mode=" << to_string(r.mode) << " seed=" << r.seed
       << " horizon=" << format_double(r.horizon_hours) << "h replications=" << r.replications
       << " rng=" << r.rng_algorithm << "\n\n";
    os << "state  occupancy                description\n";
    for (int s = 1; s <= kNumStates; ++s) {
        os << "    " << s << "  ";
        pad(os, format_double(r.occupancy[static_cast<size_t>(s - 1)]), 25);
        os << state_description(s);
        if (is_down(s)) os << " [down]";
        os << '\n';
    }
    os << '\n';
    os << "availability (simulated): " << format_double(r.availability) << " +/- "
       << format_double(r.ci_half_width) << " (95% CI)\n";
    os << "availability (smp model): " << format_double(analytic_smp) << '\n';
    const bool inside = std::isfinite(r.ci_half_width) &&
                        std::abs(r.availability - analytic_smp) <= r.ci_half_width;
    os << "analytic value inside CI: " << (inside ? "yes" : "no") << '\n';
    if (r.mode == SimMode::PeriodicClock) {
        os << "periodic-vs-smp availability gap: "
           << format_double(r.availability - analytic_smp) << '\n';
    }
}

void print_validate_report(std::ostream& os, const ValidationReport& r) {
    os << "validation at " << params_inline(r.params) << "\n\n";
    for (const PairCheck& pc : r.pairs) {
        std::ostringstream name;
        name << to_string(pc.a) << " vs " << to_string(pc.b);
        pad(os, name.str(), 30);
        os << " max rel diff " << format_double(pc.max_rel_diff);
        if (pc.gating)
            os << " (tol " << format_double(pc.tolerance) << ") "
               << (pc.pass ? "PASS" : "FAIL");
        else
            os << " (informative)";
        os << '\n';
    }
    os << "simulated availability " << format_double(r.sim.availability) << " +/- "
       << format_double(r.sim.ci_half_width) << " vs smp "
       << format_double(r.smp_availability) << ' ' << (r.sim_within_ci ? "PASS" : "FAIL")
       << '\n';
    os << "\nstate probabilities by source:\n";
    os << "state  ";
    for (const SteadyState& ss : r.analytic) pad(os, std::string(to_string(ss.source)), 25);
    os << '\n';
    for (int s = 1; s <= kNumStates; ++s) {
        os << "    " << s << "  ";
        for (const SteadyState& ss : r.analytic) pad(os, format_double(ss.prob(s)), 25);
        os << '\n';
    }
    os << "\nresult: " << (r.passed ? "PASS" : "FAIL") << '\n';
}

} // namespace hacluster
