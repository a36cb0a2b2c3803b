#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace hacluster {

/// SplitMix64; used to expand seeds into xoshiro state.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/**
 * xoshiro256** (Blackman & Vigna). The output sequence is fixed by the
 * algorithm alone, so a seed reproduces the same stream on every platform
 * and toolchain; simulation results carry the algorithm name in their
 * metadata for that reason.
 */
class Xoshiro256StarStar {
  public:
    static constexpr const char* kAlgorithm = "xoshiro256**";

    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    /// Independent stream for one replication of a seeded run.
    static Xoshiro256StarStar for_replication(std::uint64_t seed, int replication) {
        return Xoshiro256StarStar(seed ^
                                  (0x9E3779B97F4A7C15ULL *
                                   (static_cast<std::uint64_t>(replication) + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in (0, 1]; never 0, so -log(u) is always finite.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform double in (0, upper].
    double uniform(double upper) { return uniform01() * upper; }

    /// Inverse-CDF exponential sample; rate <= 0 never fires (+infinity).
    double exponential(double rate);

    bool bernoulli(double p) { return uniform01() <= p; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

inline double Xoshiro256StarStar::exponential(double rate) {
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log(uniform01()) / rate;
}

} // namespace hacluster
