#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = -1;
    std::string out; // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HACLUSTER_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("hacluster_cli_test_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kBaselineFlags =
    "--lambda 0.001 --lambda-s 0.00025 --mu 1 --beta 12 --c 0.9 --cs 0.9 --T 168";

} // namespace

TEST_CASE("solve smp prints a normalized report") {
    const CliResult r = run_cli("solve smp " + kBaselineFlags);
    CHECK(r.code == 0);
    CHECK(r.out.find("model: smp") != std::string::npos);
    CHECK(r.out.find("availability:        0.99999045357661") != std::string::npos);
    CHECK(r.out.find("downtime (min/year): 5.0176") != std::string::npos);
}

TEST_CASE("validation failures exit 1 with the invariant name") {
    const CliResult r = run_cli("solve ctmc --c 1.2");
    CHECK(r.code == 1);
    CHECK(r.out.find("c out of [0,1]") != std::string::npos);
}

TEST_CASE("solver failures exit 2") {
    // lambda_s = 0, beta = 0, c = 1 splits the chain into two closed
    // classes ({1,3} and {2}), so the balance system is singular
    const CliResult r = run_cli("solve ctmc --lambda 0.001 --lambda-s 0 --beta 0 --c 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("solver error") != std::string::npos);
}

TEST_CASE("params file and flags are equivalent; flags override") {
    const fs::path json = temp_file("baseline.json");
    {
        std::ofstream out(json);
        out << R"({"lambda":0.001,"lambda_s":0.00025,"mu":1,"beta":12,)"
            << R"("c":0.9,"c_s":0.9,"T":168})";
    }
    const CliResult from_flags = run_cli("solve smp " + kBaselineFlags);
    const CliResult from_file = run_cli("solve smp --params " + json.string());
    CHECK(from_file.code == 0);
    CHECK(from_file.out == from_flags.out);

    const fs::path other = temp_file("other.json");
    {
        std::ofstream out(other);
        out << R"({"lambda":0.5})";
    }
    const CliResult overridden = run_cli("solve smp --params " + other.string() +
                                         " --lambda 0.001");
    CHECK(overridden.out == from_flags.out);

    fs::remove(json);
    fs::remove(other);
}

TEST_CASE("unknown keys in the params file are rejected") {
    const fs::path json = temp_file("typo.json");
    {
        std::ofstream out(json);
        out << R"({"lambda":0.001,"lamda_s":0.00025})";
    }
    const CliResult r = run_cli("solve smp --params " + json.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("unknown key") != std::string::npos);
    fs::remove(json);
}

TEST_CASE("sweep CSV: shape, monotone columns, reproducible bytes") {
    const fs::path csv = temp_file("sweep.csv");
    const CliResult r = run_cli("sweep --output " + csv.string());
    CHECK(r.code == 0);
    const std::string bytes = slurp(csv);

    std::istringstream lines(bytes);
    std::string line;
    std::vector<std::string> data;
    bool saw_header = false;
    while (std::getline(lines, line)) {
        if (line.rfind("# ", 0) == 0) continue;
        if (!saw_header) {
            CHECK(line ==
                  "ratio,lambda,lambda_s,downtime_ctmc_min_yr,downtime_smp_min_yr,"
                  "difference_min_yr");
            saw_header = true;
            continue;
        }
        data.push_back(line);
    }
    CHECK(data.size() == 40);
    CHECK(bytes.find("# command=sweep") == 0);
    CHECK(bytes.find("\r") == std::string::npos); // LF endings only

    double prev_ctmc = 1e300, prev_smp = 1e300;
    for (const std::string& row : data) {
        double ratio, lambda, lambda_s, dc, ds, diff;
        REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &ratio, &lambda,
                            &lambda_s, &dc, &ds, &diff) == 6);
        CHECK(dc <= prev_ctmc);
        CHECK(ds <= prev_smp);
        prev_ctmc = dc;
        prev_smp = ds;
    }

    // identical invocation (same output path) reproduces the bytes
    run_cli("sweep --output " + csv.string());
    CHECK(slurp(csv) == bytes);
    fs::remove(csv);
}

TEST_CASE("sweep rejects a bad grid") {
    const CliResult r = run_cli("sweep --min-ratio 5 --max-ratio 2");
    CHECK(r.code == 1);
}

TEST_CASE("simulate is deterministic and reports the analytic value") {
    const std::string args = "simulate --seed 42 --horizon 1e4 --reps 3";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("availability (simulated):") != std::string::npos);
    CHECK(a.out.find("availability (smp model): 0.99999045357661") != std::string::npos);
    CHECK(a.out.find("rng=xoshiro256**") != std::string::npos);
}

TEST_CASE("periodic mode reports the gap against the smp model") {
    const CliResult r = run_cli("simulate --mode periodic --seed 7 --horizon 1e4 --reps 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("periodic-vs-smp availability gap:") != std::string::npos);
}

TEST_CASE("validate passes at baseline and under perfect coverage") {
    const CliResult r = run_cli("validate --seed 42");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);

    // perfect coverage leaves only state 6 down (~2.5e-7), so give the
    // simulation check a longer horizon to see enough failures
    const CliResult perfect = run_cli("validate --seed 42 --c 1 --cs 1 --horizon 1e7");
    CHECK(perfect.code == 0);
    CHECK(perfect.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("validate exits 3 when a tolerance cannot be met") {
    // far below the double-precision agreement of the two routes
    const CliResult r = run_cli("validate --seed 42 --tol 1e-18");
    CHECK(r.code == 3);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("solve --output embeds the manifest and reproduces bytes") {
    const fs::path csv = temp_file("solve.csv");
    const CliResult r = run_cli("solve smp " + kBaselineFlags + " --output " + csv.string());
    CHECK(r.code == 0);
    const std::string bytes = slurp(csv);
    CHECK(bytes.rfind("# command=solve smp", 0) == 0);
    CHECK(bytes.find("# lambda=0.001\n") != std::string::npos);
    CHECK(bytes.find("# T=168\n") != std::string::npos);
    CHECK(bytes.find("# version=") != std::string::npos);
    CHECK(bytes.find("state,probability,down") != std::string::npos);

    run_cli("solve smp " + kBaselineFlags + " --output " + csv.string());
    CHECK(slurp(csv) == bytes);
    fs::remove(csv);
}

TEST_CASE("missing subcommand is an input error") {
    const CliResult r = run_cli("");
    CHECK(r.code == 1);
}
