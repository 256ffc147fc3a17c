#pragma once

#include <cmath>
#include <cstdint>

namespace magstego {

// splitmix64. One 64-bit word of state, full period, cheap to seed; used
// both as the base generator and to derive per-stream keys.
struct Rng {
    std::uint64_t state = 0;

    explicit Rng(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in (0,1); never returns 0 so it is safe inside logs
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }
};

// Independent stream for a (seed, index...) tuple. Streams are stable
// across platforms and independent of evaluation order, which is what
// makes multi-worker synthesis deterministic.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    Rng mix(seed);
    std::uint64_t k = mix.next_u64();
    k ^= (a + 0x9e3779b97f4a7c15ull) * 0xff51afd7ed558ccdull;
    Rng mix2(k);
    std::uint64_t k2 = mix2.next_u64();
    k2 ^= (b + 0x9e3779b97f4a7c15ull) * 0xc4ceb9fe1a85ec53ull;
    Rng mix3(k2);
    return Rng(mix3.next_u64());
}

// Poisson sampler. Knuth multiplication for small means, PTRS
// (Hoermann's transformed rejection) for large ones.
inline std::uint64_t poisson(Rng& rng, double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
        const double limit = std::exp(-mean);
        double prod = rng.uniform();
        std::uint64_t n = 0;
        while (prod > limit) {
            prod *= rng.uniform();
            ++n;
        }
        return n;
    }
    // PTRS
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = rng.uniform() - 0.5;
        double v = rng.uniform();
        double us = 0.5 - std::fabs(u);
        double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

}  // namespace magstego
