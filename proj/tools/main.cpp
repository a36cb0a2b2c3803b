#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hacluster/ctmc.hpp"
#include "hacluster/metrics.hpp"
#include "hacluster/montecarlo.hpp"
#include "hacluster/report_io.hpp"
#include "hacluster/smp.hpp"

namespace {

using hacluster::ModelParams;
using hacluster::ValidationError;

struct ParamFlags {
    std::optional<double> lambda, lambda_s, mu, beta, c, c_s, T;
    std::string params_file;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    cmd->add_option("--lambda", f.lambda, "failure rate of the active unit (per hour)");
    cmd->add_option("--lambda-s", f.lambda_s, "failure rate of the standby unit (per hour)");
    cmd->add_option("--mu", f.mu, "restoration rate (per hour)");
    cmd->add_option("--beta", f.beta, "reboot rate (per hour)");
    cmd->add_option("--c", f.c, "coverage probability of the active unit");
    cmd->add_option("--cs", f.c_s, "coverage probability of the standby unit");
    cmd->add_option("--T", f.T, "diagnostic interval for latent standby faults (hours)");
    cmd->add_option("--params", f.params_file, "JSON parameter file (flags override it)")
        ->check(CLI::ExistingFile);
}

ModelParams params_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open params file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw ValidationError("params file must hold a JSON object");

    ModelParams p;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            throw ValidationError("key '" + key + "' in params file must be a number");
        const double v = value.get<double>();
        if (key == "lambda") p.lambda_active = v;
        else if (key == "lambda_s") p.lambda_standby = v;
        else if (key == "mu") p.mu = v;
        else if (key == "beta") p.beta = v;
        else if (key == "c") p.c = v;
        else if (key == "c_s") p.c_s = v;
        else if (key == "T") p.T = v;
        else throw ValidationError("unknown key '" + key + "' in params file");
    }
    return p;
}

// Defaults, then file values, then flags; flags win.
ModelParams resolve_params(const ParamFlags& f) {
    ModelParams p;
    if (!f.params_file.empty()) p = params_from_file(f.params_file);
    if (f.lambda) p.lambda_active = *f.lambda;
    if (f.lambda_s) p.lambda_standby = *f.lambda_s;
    if (f.mu) p.mu = *f.mu;
    if (f.beta) p.beta = *f.beta;
    if (f.c) p.c = *f.c;
    if (f.c_s) p.c_s = *f.c_s;
    if (f.T) p.T = *f.T;
    return hacluster::validate_params(p);
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state availability of a two-node active/standby cluster:\n"
                 "exact semi-Markov solution, exponential-diagnostic approximation,\n"
                 "and a Monte Carlo cross-check."};
    app.require_subcommand(1);
    int exit_code = 0;

    // solve ---------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "solve one model and report availability");
    ParamFlags solve_params;
    std::string solve_model_name;
    std::string solve_method = "numeric";
    std::string solve_output;
    solve->add_option("model", solve_model_name, "which model to solve")
        ->required()
        ->check(CLI::IsMember({"ctmc", "smp"}));
    add_param_flags(solve, solve_params);
    solve->add_option("--method", solve_method, "solution route")
        ->check(CLI::IsMember({"numeric", "closed"}));
    solve->add_option("--output", solve_output, "write a CSV report to this path");
    solve->callback([&] {
        const ModelParams p = resolve_params(solve_params);
        const auto model =
            solve_model_name == "ctmc" ? hacluster::Model::Ctmc : hacluster::Model::Smp;
        const auto method = solve_method == "closed" ? hacluster::Method::Closed
                                                     : hacluster::Method::Numeric;
        const auto report = hacluster::solve_model(p, model, method);
        hacluster::print_solve_report(std::cout, report);
        if (!solve_output.empty()) {
            hacluster::RunManifest m;
            m.command = "solve " + solve_model_name;
            m.params = p;
            m.outputs = {solve_output};
            std::ostringstream os;
            hacluster::write_solve_csv(os, report, m);
            write_file(solve_output, os.str());
            std::cout << "wrote " << solve_output << '\n';
        }
    });

    // sweep ---------------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "downtime of both models over a grid of mu/lambda ratios");
    double min_ratio = 1e2, max_ratio = 1e6;
    int points = 40;
    double sweep_T = 168.0;
    std::string sweep_output;
    sweep->add_option("--min-ratio", min_ratio, "smallest mu/lambda ratio");
    sweep->add_option("--max-ratio", max_ratio, "largest mu/lambda ratio");
    sweep->add_option("--points", points, "number of log-spaced grid points");
    sweep->add_option("--T", sweep_T, "diagnostic interval (hours)");
    sweep->add_option("--output", sweep_output, "write the sweep CSV to this path");
    sweep->callback([&] {
        if (!(min_ratio > 0) || !(max_ratio > min_ratio) || points < 2)
            throw ValidationError("invalid grid: need 0 < min-ratio < max-ratio and points >= 2");
        std::vector<double> ratios(static_cast<size_t>(points));
        const double lmin = std::log10(min_ratio), lmax = std::log10(max_ratio);
        for (int i = 0; i < points; ++i)
            ratios[static_cast<size_t>(i)] =
                std::pow(10.0, lmin + (lmax - lmin) * i / (points - 1));
        const auto result = hacluster::fig3_sweep(ratios, sweep_T);
        if (sweep_output.empty()) {
            hacluster::print_sweep_table(std::cout, result);
        } else {
            hacluster::RunManifest m;
            m.command = "sweep";
            m.params = result.rows.front().params;
            m.outputs = {sweep_output};
            std::ostringstream os;
            hacluster::write_sweep_csv(os, result, m);
            write_file(sweep_output, os.str());
            std::cout << "wrote " << sweep_output << '\n';
        }
    });

    // simulate ------------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo trajectory simulation");
    ParamFlags sim_params;
    hacluster::SimConfig sim_cfg;
    std::string sim_mode = "smp";
    std::string sim_output;
    add_param_flags(simulate, sim_params);
    simulate->add_option("--seed", sim_cfg.seed, "RNG seed");
    simulate->add_option("--horizon", sim_cfg.horizon_hours,
                         "counted hours per replication");
    simulate->add_option("--reps", sim_cfg.replications, "number of replications");
    simulate->add_option("--mode", sim_mode, "diagnostic semantics")
        ->check(CLI::IsMember({"smp", "periodic"}));
    simulate->add_option("--output", sim_output, "write a CSV report to this path");
    simulate->callback([&] {
        sim_cfg.params = resolve_params(sim_params);
        hacluster::validate_smp_params(sim_cfg.params);
        sim_cfg.mode = sim_mode == "periodic" ? hacluster::SimMode::PeriodicClock
                                              : hacluster::SimMode::SmpSemantics;
        const auto result = hacluster::simulate(sim_cfg);
        const double analytic =
            hacluster::availability(hacluster::smp_state_probabilities(sim_cfg.params));
        hacluster::print_simulate_report(std::cout, result, analytic);
        if (!sim_output.empty()) {
            hacluster::RunManifest m;
            m.command = "simulate";
            m.params = sim_cfg.params;
            m.seed = sim_cfg.seed;
            m.outputs = {sim_output};
            std::ostringstream os;
            hacluster::write_simulate_csv(os, result, m);
            write_file(sim_output, os.str());
            std::cout << "wrote " << sim_output << '\n';
        }
    });

    // validate ------------------------------------------------------------
    auto* validate = app.add_subcommand(
        "validate", "cross-check all solvers against each other and the simulator");
    ParamFlags val_params;
    hacluster::SimConfig val_cfg;
    val_cfg.seed = 42;
    double tol = 1e-9;
    std::string val_output;
    add_param_flags(validate, val_params);
    validate->add_option("--seed", val_cfg.seed, "RNG seed for the simulation check");
    validate->add_option("--horizon", val_cfg.horizon_hours,
                         "counted hours per replication");
    validate->add_option("--reps", val_cfg.replications, "number of replications");
    validate->add_option("--tol", tol, "relative tolerance for closed/numeric agreement");
    validate->add_option("--output", val_output, "write a CSV report to this path");
    validate->callback([&] {
        const ModelParams p = resolve_params(val_params);
        const auto report = hacluster::validate_all(p, val_cfg, tol);
        hacluster::print_validate_report(std::cout, report);
        if (!val_output.empty()) {
            hacluster::RunManifest m;
            m.command = "validate";
            m.params = p;
            m.seed = val_cfg.seed;
            m.outputs = {val_output};
            std::ostringstream os;
            hacluster::write_validate_csv(os, report, m);
            write_file(val_output, os.str());
            std::cout << "wrote " << val_output << '\n';
        }
        if (!report.passed) exit_code = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid params file: " << e.what() << '\n';
        return 1;
    } catch (const hacluster::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 2;
    } catch (const hacluster::ConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
