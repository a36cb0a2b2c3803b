#include "hacluster/smp.hpp"

#include <cmath>

namespace hacluster {

namespace {

// 1 - (1 - e^-x)/x for x > 0; series below 1e-4 where the direct form
// cancels. This is the probability the exponential fires first in the
// Exp-vs-U(0,T) race, and also h_5 * lambda.
double one_minus_exp_ratio(double x) {
    if (x < 1e-4) {
        return x / 2 - x * x / 6 + x * x * x / 24 - x * x * x * x / 120;
    }
    return (x + std::expm1(-x)) / x;
}

} // namespace

double exp_outlasts_uniform(double lambda, double T) {
    if (!(lambda > 0)) throw ValidationError("lambda must be positive for semi-Markov analysis");
    if (!(T > 0)) throw ValidationError("T must be positive");
    return -std::expm1(-lambda * T) / (lambda * T);
}

EmbeddedChain embedded_matrix(const ModelParams& params) {
    const ModelParams p = validate_smp_params(params);
    const double lam = p.lambda_active;
    const double lam_s = p.lambda_standby;
    const double mu = p.mu;
    const double total1 = lam + lam_s;
    const double q = exp_outlasts_uniform(lam, p.T);

    EmbeddedChain ec;
    ec.params = p;
    auto& m = ec.p;
    m[0][1] = lam * (1 - p.c) / total1;
    m[0][2] = lam * p.c / total1;
    m[0][3] = lam_s * p.c_s / total1;
    m[0][4] = lam_s * (1 - p.c_s) / total1;
    m[1][2] = p.beta / (p.beta + lam_s);
    m[1][5] = lam_s / (p.beta + lam_s);
    m[2][0] = mu / (lam_s + mu);
    m[2][5] = lam_s / (lam_s + mu);
    m[3][0] = mu / (lam + mu);
    m[3][5] = lam / (lam + mu);
    m[4][3] = q;
    m[4][5] = 1 - q;
    m[5][2] = 0.5;
    m[5][3] = 0.5;

    using K = SojournDistribution::Kind;
    ec.sojourns = {{{1, K::Exponential, lam + lam_s, 0},
                    {2, K::Exponential, p.beta + lam_s, 0},
                    {3, K::Exponential, lam_s + mu, 0},
                    {4, K::Exponential, lam + mu, 0},
                    {5, K::ExpUniformMin, lam, p.T},
                    {6, K::Exponential, 2 * mu, 0}}};
    return ec;
}

Vec6 mean_sojourn_times(const ModelParams& params) {
    const ModelParams p = validate_smp_params(params);
    const double lam = p.lambda_active;
    const double lam_s = p.lambda_standby;
    return {1 / (lam + lam_s),
            1 / (p.beta + lam_s),
            1 / (lam_s + p.mu),
            1 / (lam + p.mu),
            one_minus_exp_ratio(lam * p.T) / lam,
            1 / (2 * p.mu)};
}

Vec6 embedded_stationary(const EmbeddedChain& ec) {
    return stationary_of_stochastic<kNumStates>(ec.p);
}

namespace {

SteadyState normalize_visit_weights(const Vec6& v, const Vec6& h, Source source) {
    Vec6 vh{};
    double total = 0.0;
    for (int i = 0; i < kNumStates; ++i) {
        vh[i] = v[i] * h[i];
        total += vh[i];
    }
    SteadyState ss;
    for (int i = 0; i < kNumStates; ++i) ss.probs[i] = vh[i] / total;
    ss.source = source;
    return ss;
}

} // namespace

SteadyState smp_state_probabilities(const ModelParams& params) {
    const ModelParams p = validate_smp_params(params);
    const EmbeddedChain ec = embedded_matrix(p);
    return normalize_visit_weights(embedded_stationary(ec), mean_sojourn_times(p),
                                   Source::SmpNumeric);
}

SteadyState smp_state_probabilities_closed_form(const ModelParams& params) {
    const ModelParams p = validate_smp_params(params);
    const double lam = p.lambda_active;
    const double lam_s = p.lambda_standby;
    const double mu = p.mu;
    const double total1 = lam + lam_s;
    const double q = exp_outlasts_uniform(lam, p.T);
    const double exp_first = one_minus_exp_ratio(lam * p.T); // 1 - q, stable

    // Visit ratios v_i / v_1 of the embedded chain (see docs/MODEL.md).
    // alpha: one-step probability of reaching 3 from 1 (directly or via 2);
    // gamma: same for 4 (directly or via 5). As with the generator solve,
    // 1 - alpha - gamma is evaluated in expanded form to avoid cancellation.
    const double v2 = lam * (1 - p.c) / total1;
    const double v5 = lam_s * (1 - p.c_s) / total1;
    const double alpha = (lam * p.c + lam * (1 - p.c) * p.beta / (p.beta + lam_s)) / total1;
    const double gamma = (lam_s * p.c_s + lam_s * (1 - p.c_s) * q) / total1;
    const double miss =
        (lam * (1 - p.c) * lam_s / (p.beta + lam_s) + lam_s * (1 - p.c_s) * exp_first) / total1;
    const double v6 = 2 * (lam + mu) * (lam_s + mu) / (mu * (lam + lam_s + 2 * mu)) *
                      (miss + alpha * lam_s / (mu + lam_s) + gamma * lam / (mu + lam));
    const double v3 = alpha + v6 / 2;
    const double v4 = gamma + v6 / 2;

    return normalize_visit_weights({1.0, v2, v3, v4, v5, v6}, mean_sojourn_times(p),
                                   Source::SmpClosed);
}

} // namespace hacluster
