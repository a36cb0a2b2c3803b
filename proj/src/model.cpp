#include "hacluster/model.hpp"

namespace hacluster {

ModelParams validate_params(const ModelParams& p) {
    // Comparisons are written so that NaN fails the corresponding check.
    if (!(p.lambda_active >= 0)) throw ValidationError("lambda must be nonnegative");
    if (!(p.lambda_standby >= 0)) throw ValidationError("lambda_s must be nonnegative");
    if (!(p.mu > 0)) throw ValidationError("mu must be positive");
    if (!(p.beta >= 0)) throw ValidationError("beta must be nonnegative");
    if (!(p.c >= 0 && p.c <= 1)) throw ValidationError("c out of [0,1]");
    if (!(p.c_s >= 0 && p.c_s <= 1)) throw ValidationError("c_s out of [0,1]");
    if (!(p.T > 0)) throw ValidationError("T must be positive");
    return p;
}

ModelParams validate_smp_params(const ModelParams& p) {
    validate_params(p);
    if (!(p.lambda_active > 0))
        throw ValidationError("lambda must be positive for semi-Markov analysis");
    return p;
}

bool is_down(int state) { return state == 2 || state == 6; }

std::string_view state_description(int state) {
    switch (state) {
        case 1: return "both units working";
        case 2: return "active unit failed, switchover not covered";
        case 3: return "standby serving, failed unit in restoration";
        case 4: return "standby failed, fault detected";
        case 5: return "standby failed, fault latent";
        case 6: return "both units down";
        default: return "invalid state";
    }
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::CtmcNumeric: return "ctmc-numeric";
        case Source::CtmcClosed: return "ctmc-closed";
        case Source::SmpNumeric: return "smp-numeric";
        case Source::SmpClosed: return "smp-closed";
        case Source::Simulated: return "simulated";
    }
    return "unknown";
}

} // namespace hacluster
