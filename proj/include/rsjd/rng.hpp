#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace rsjd {

// SplitMix64 avalanche step. Per-path streams are derived as seed XOR path
// index; the avalanche decorrelates adjacent indices before seeding the engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

using RngEngine = std::mt19937_64;

inline RngEngine path_rng(std::uint64_t seed, std::uint64_t path_index = 0) {
    return RngEngine(splitmix64(seed ^ path_index));
}

// Draws below use fixed engine-call counts so interleaved simulation stages
// stay reproducible regardless of library implementation details.

// Uniform on (0, 1]; never returns 0 so log() is safe.
inline double uniform01(RngEngine& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

inline double exponential_draw(RngEngine& rng, double rate) {
    return -std::log(uniform01(rng)) / rate;
}

// Box-Muller without caching: two engine calls per normal.
inline double normal_draw(RngEngine& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Inverse-CDF categorical draw over nonnegative weights summing to ~1.
inline std::size_t categorical_draw(RngEngine& rng, std::span<const double> probs) {
    const double u = uniform01(rng);
    double acc = 0.0;
    for (std::size_t m = 0; m + 1 < probs.size(); ++m) {
        acc += probs[m];
        if (u <= acc) return m;
    }
    return probs.empty() ? throw std::invalid_argument("categorical_draw: empty support")
                         : probs.size() - 1;
}

}  // namespace rsjd
