#include "hacluster/ctmc.hpp"

namespace hacluster {

GeneratorMatrix build_generator(const ModelParams& params) {
    const ModelParams p = validate_params(params);
    GeneratorMatrix g;
    g.params = p;
    auto& q = g.q;

    q[0][1] = p.lambda_active * (1 - p.c);
    q[0][2] = p.lambda_active * p.c;
    q[0][3] = p.lambda_standby * p.c_s;
    q[0][4] = p.lambda_standby * (1 - p.c_s);
    q[1][2] = p.beta;
    q[1][5] = p.lambda_standby;
    q[2][0] = p.mu;
    q[2][5] = p.lambda_standby;
    q[3][0] = p.mu;
    q[3][5] = p.lambda_active;
    q[4][3] = 2.0 / p.T;
    q[4][5] = p.lambda_active;
    q[5][2] = p.mu;
    q[5][3] = p.mu;

    for (int i = 0; i < kNumStates; ++i) {
        double out = 0.0;
        for (int j = 0; j < kNumStates; ++j)
            if (j != i) out += q[i][j];
        q[i][i] = -out;
    }
    if (!is_finite<kNumStates>(q)) throw ValidationError("generator has non-finite entries");
    return g;
}

SteadyState ctmc_steady_state_numeric(const GeneratorMatrix& g) {
    // pi * Q = 0 is Q^T pi = 0 column-wise; the conservation row supplies
    // the normalization.
    Matrix6 qt{};
    for (int i = 0; i < kNumStates; ++i)
        for (int j = 0; j < kNumStates; ++j) qt[i][j] = g.q[j][i];
    SteadyState ss;
    ss.probs = solve_singular_balance<kNumStates>(qt);
    ss.source = Source::CtmcNumeric;
    return ss;
}

SteadyState ctmc_steady_state_closed_form(const ModelParams& params) {
    const ModelParams p = validate_params(params);
    const double lam = p.lambda_active;
    const double lam_s = p.lambda_standby;
    const double mu = p.mu;
    const double d = 2.0 / p.T;

    // Per-state ratios r_i = P_i / P_1. Every aggregate below is a sum of
    // nonnegative terms, so the evaluation is cancellation-free.
    const double r2 = lam * (1 - p.c) / (lam_s + p.beta);
    const double r5 = lam_s * (1 - p.c_s) / (d + lam);
    const double in3 = lam * p.c + p.beta * r2;  // inflow to 3 from states 1 and 2
    const double in4 = lam_s * p.c_s + d * r5;   // inflow to 4 from states 1 and 5
    const double r6 = (lam_s * r2 + lam * r5 + lam_s * in3 / (mu + lam_s) +
                       lam * in4 / (mu + lam)) *
                      (mu + lam_s) * (mu + lam) / (mu * mu * (2 * mu + lam + lam_s));
    const double r3 = (in3 + mu * r6) / (mu + lam_s);
    const double r4 = (in4 + mu * r6) / (mu + lam);

    const double p1 = 1.0 / (1.0 + r2 + r3 + r4 + r5 + r6);
    SteadyState ss;
    ss.probs = {p1, r2 * p1, r3 * p1, r4 * p1, r5 * p1, r6 * p1};
    ss.source = Source::CtmcClosed;
    return ss;
}

} // namespace hacluster
