#include <doctest.h>

#include <cmath>

#include "hacluster/ctmc.hpp"
#include "hacluster/metrics.hpp"
#include "param_grid.hpp"

using namespace hacluster;

namespace {

double max_state_rel_diff(const SteadyState& a, const SteadyState& b) {
    return max_rel_diff(a, b);
}

} // namespace

TEST_SUITE("ctmc") {

TEST_CASE("generator rates follow the transition diagram") {
    const GeneratorMatrix g = build_generator(ModelParams{});

    CHECK(g.rate(1, 2) == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(g.rate(1, 3) == doctest::Approx(9e-4).epsilon(1e-12));
    CHECK(g.rate(1, 4) == doctest::Approx(2.25e-4).epsilon(1e-12));
    CHECK(g.rate(1, 5) == doctest::Approx(2.5e-5).epsilon(1e-12));
    CHECK(g.rate(2, 3) == 12.0);
    CHECK(g.rate(2, 6) == 0.00025);
    CHECK(g.rate(3, 1) == 1.0);
    CHECK(g.rate(3, 6) == 0.00025);
    CHECK(g.rate(4, 1) == 1.0);
    CHECK(g.rate(4, 6) == 0.001);
    CHECK(g.rate(5, 4) == 2.0 / 168.0); // diagnostic approximated at rate 2/T
    CHECK(g.rate(5, 6) == 0.001);
    CHECK(g.rate(6, 3) == 1.0);
    CHECK(g.rate(6, 4) == 1.0);
}

TEST_CASE("generator zero pattern and row sums") {
    Xoshiro256StarStar rng(11);
    const bool allowed[6][6] = {
        {false, true, true, true, true, false},
        {false, false, true, false, false, true},
        {true, false, false, false, false, true},
        {true, false, false, false, false, true},
        {false, false, false, true, false, true},
        {false, false, true, true, false, false},
    };
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p = testgrid::random_params(rng);
        const GeneratorMatrix g = build_generator(p);
        for (int i = 0; i < 6; ++i) {
            double row = 0.0;
            for (int j = 0; j < 6; ++j) {
                row += g.q[i][j];
                if (i == j) {
                    CHECK(g.q[i][j] <= 0.0);
                } else if (allowed[i][j]) {
                    CHECK(g.q[i][j] > 0.0);
                } else {
                    CHECK(g.q[i][j] == 0.0);
                }
            }
            CHECK(std::abs(row) <= 1e-12);
        }
    }
}

TEST_CASE("near-perfect units spend essentially all time in state 1") {
    ModelParams p;
    p.lambda_active = 1e-9;
    p.lambda_standby = 2.5e-10;
    const SteadyState ss = ctmc_steady_state_numeric(build_generator(p));
    CHECK(ss.prob(1) >= 1.0 - 1e-6);
    CHECK(ss.source == Source::CtmcNumeric);
}

TEST_CASE("numeric solution satisfies the balance equations") {
    Xoshiro256StarStar rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p = testgrid::random_params(rng);
        const GeneratorMatrix g = build_generator(p);
        const SteadyState ss = ctmc_steady_state_numeric(g);

        double sum = 0.0;
        for (double x : ss.probs) sum += x;
        CHECK(std::abs(sum - 1.0) <= 1e-12);

        // ||pi Q||_inf
        double worst = 0.0;
        for (int j = 0; j < 6; ++j) {
            double col = 0.0;
            for (int i = 0; i < 6; ++i) col += ss.probs[i] * g.q[i][j];
            worst = std::max(worst, std::abs(col));
        }
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("baseline steady state, pinned") {
    // Reference values computed independently (high-precision evaluation of
    // the balance equations); availability 0.999990478, about 5.0 min/year.
    const Vec6 expected = {0.99681336525743069, 8.3066049895413045e-06,
                           0.00099777727249118851, 0.00024823943408059995,
                           0.0019310960028049847, 1.215428203127878e-06};
    const SteadyState numeric = ctmc_steady_state_numeric(build_generator(ModelParams{}));
    const SteadyState closed = ctmc_steady_state_closed_form(ModelParams{});
    for (int i = 0; i < 6; ++i) {
        CHECK(numeric.probs[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        CHECK(closed.probs[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    CHECK(availability(numeric) == doctest::Approx(0.99999047796680729).epsilon(1e-12));
}

TEST_CASE("closed form agrees with the numeric route at baseline") {
    const SteadyState numeric = ctmc_steady_state_numeric(build_generator(ModelParams{}));
    const SteadyState closed = ctmc_steady_state_closed_form(ModelParams{});
    CHECK(max_state_rel_diff(numeric, closed) <= 1e-9);
    CHECK(closed.source == Source::CtmcClosed);
}

TEST_CASE("closed form agrees with the numeric route across the parameter grid") {
    Xoshiro256StarStar rng(13);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const ModelParams p = testgrid::random_params(rng);
        const SteadyState numeric = ctmc_steady_state_numeric(build_generator(p));
        const SteadyState closed = ctmc_steady_state_closed_form(p);
        worst = std::max(worst, max_state_rel_diff(numeric, closed));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("perfect coverage empties the uncovered states") {
    ModelParams p;
    p.c = 1.0;
    CHECK(ctmc_steady_state_closed_form(p).prob(2) == 0.0);

    ModelParams q;
    q.c_s = 1.0;
    CHECK(ctmc_steady_state_closed_form(q).prob(5) == 0.0);
}

TEST_CASE("closed-form ratios match the per-state balance") {
    Xoshiro256StarStar rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p = testgrid::random_params(rng);
        const SteadyState ss = ctmc_steady_state_closed_form(p);
        const double r2 = p.lambda_active * (1 - p.c) / (p.lambda_standby + p.beta);
        const double r5 = p.lambda_standby * (1 - p.c_s) / (2.0 / p.T + p.lambda_active);
        CHECK(ss.prob(2) / ss.prob(1) == doctest::Approx(r2).epsilon(1e-12));
        CHECK(ss.prob(5) / ss.prob(1) == doctest::Approx(r5).epsilon(1e-12));
    }
}

TEST_CASE("more repair capacity never increases the down probability") {
    ModelParams p;
    double prev = 2.0;
    for (int i = 0; i < 30; ++i) {
        p.mu = std::pow(10.0, -1.0 + 2.0 * i / 29.0);
        const SteadyState ss = ctmc_steady_state_numeric(build_generator(p));
        const double down = ss.prob(2) + ss.prob(6);
        CHECK(down <= prev * (1.0 + 1e-12));
        prev = down;
    }
}

TEST_CASE("lambda = 0 stays solvable in the ctmc routes") {
    ModelParams p;
    p.lambda_active = 0.0;
    const SteadyState numeric = ctmc_steady_state_numeric(build_generator(p));
    const SteadyState closed = ctmc_steady_state_closed_form(p);
    CHECK(numeric.prob(2) == 0.0);
    CHECK(closed.prob(2) == 0.0);
    CHECK(max_state_rel_diff(numeric, closed) <= 1e-9);
}

} // TEST_SUITE
