#pragma once

#include <cstdint>
#include <random>

namespace bipcolor::rng {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used as the published
// seed-mixing function: child = mix(base, index) must be reproducible
// bit-exactly in any language, so the definition is frozen here.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Per-trial child seed: mix(base, i) = splitmix64(base + (i + 1) * golden).
// Distinct trial indices give distinct inputs, so children are pairwise
// distinct with overwhelming probability (splitmix64 is a bijection).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t trial_index) {
    return splitmix64(base + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

// Uniform double in [0,1) from the top 53 bits. std::uniform_real_distribution
// is implementation-defined; this is bit-exact across standard libraries.
inline double uniform_double(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), rejection sampled.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = eng();
    } while (r >= limit);
    return r % n;
}

}  // namespace bipcolor::rng
