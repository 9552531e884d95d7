#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace knotfit {

// All randomness flows through these helpers so that a run is a pure function
// of its seed and draws happen in a pinned order.

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-row seeds for experiment sweeps: independent streams from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(master ^ splitmix64(index + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, count); unbiased via rejection.
inline int uniform_index(std::mt19937_64& rng, int count) {
    const auto n = static_cast<std::uint64_t>(count);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<int>(x % n);
}

// Inverse-CDF draw from a categorical distribution.
inline int sample_categorical(std::span<const double> probabilities, std::mt19937_64& rng) {
    const double u = unit_double(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
        acc += probabilities[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probabilities.size()) - 1;
}

}  // namespace knotfit
