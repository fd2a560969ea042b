#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace roverloc {

/// splitmix64 finalizer. Scrambles a 64-bit value so that sequential or
/// otherwise correlated inputs yield decorrelated outputs.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent seed for a named substream of `base`. Used to
/// give every rover, restart, and noise sample its own stream so results
/// do not depend on evaluation order.
constexpr std::uint64_t derive_stream(std::uint64_t base, std::uint64_t stream) noexcept {
    return mix64(base ^ mix64(stream));
}

/// Deterministic random source. Wraps std::mt19937_64 but performs all
/// variate transforms itself: the standard distributions are
/// implementation-defined, which would break byte-identical replay across
/// standard libraries. The seed is finalized with mix64 so that sequential
/// seeds (base, base+1, ...) form a splitmix-style family of streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Lemire's rejection method, unbiased.
    std::uint64_t bounded(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = -n % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Gaussian with mean 0, Box-Muller. Two uniforms per call; no cached
    /// spare, so the draw count per sample is fixed.
    double normal(double sigma) {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace roverloc
