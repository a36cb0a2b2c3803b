#include "hacluster/sojourn.hpp"

#include <algorithm>
#include <cmath>

#include "hacluster/linalg.hpp"

namespace hacluster {

double SojournDistribution::survival(double t) const {
    if (t <= 0.0) return 1.0;
    switch (kind) {
        case Kind::Exponential:
            return std::exp(-rate * t);
        case Kind::ExpUniformMin:
            if (t >= deadline) return 0.0;
            return (1.0 - t / deadline) * std::exp(-rate * t);
    }
    return 0.0;
}

double SojournDistribution::cdf(double t) const { return 1.0 - survival(t); }

double integrate_tail(const SojournDistribution& d, double upper) {
    if (!(upper > 0.0)) throw ValidationError("integration upper bound must be positive");
    double b = upper;
    if (d.kind == SojournDistribution::Kind::ExpUniformMin) b = std::min(b, d.deadline);
    if (d.survival(b) > 1e-9)
        throw ConvergenceError("tail mass above 1e-9 at the integration upper bound");
    return simpson([&d](double t) { return d.survival(t); }, 0.0, b, 20000);
}

} // namespace hacluster
