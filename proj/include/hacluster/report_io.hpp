#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hacluster/metrics.hpp"

namespace hacluster {

inline constexpr const char* kToolVersion = "1.0.0";

/**
 * Provenance of one CLI run, embedded as a `# key=value` comment header in
 * every CSV this tool writes. Only deterministic fields are emitted so that
 * identical invocations produce byte-identical files.
 */
struct RunManifest {
    std::string command;
    ModelParams params;
    std::string version = kToolVersion;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> outputs;
};

/// Locale-independent double formatting with 17 significant digits
/// ('.' decimal separator, no grouping); round-trips exactly.
std::string format_double(double v);

std::string manifest_header(const RunManifest& m);

void write_solve_csv(std::ostream& os, const AvailabilityReport& r, const RunManifest& m);
void write_sweep_csv(std::ostream& os, const SweepResult& r, const RunManifest& m);
void write_simulate_csv(std::ostream& os, const SimResult& r, const RunManifest& m);
void write_validate_csv(std::ostream& os, const ValidationReport& r, const RunManifest& m);

void print_solve_report(std::ostream& os, const AvailabilityReport& r);
void print_sweep_table(std::ostream& os, const SweepResult& r);
void print_simulate_report(std::ostream& os, const SimResult& r, double analytic_smp);
void print_validate_report(std::ostream& os, const ValidationReport& r);

} // namespace hacluster
