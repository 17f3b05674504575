#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qtw/walk.hpp"

namespace qtw {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// One seed, many independent streams: every consumer derives its generator
/// from (seed, stream), so parallel workers never share state.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0xA24BAED4963EE407ULL * (stream + 1));
    return std::mt19937_64(splitmix64(s));
}

/// Unbiased draw from [0, bound) by rejection; avoids the library
/// distributions so sequences stay pinned to the engine output.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline double uniform_unit(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

inline Walk random_walk(std::mt19937_64& rng, int n) {
    std::vector<int> steps(static_cast<std::size_t>(n));
    std::uint64_t word = 0;
    for (int j = 0; j < n; ++j) {
        if ((j & 63) == 0) word = rng();
        steps[j] = (word >> (j & 63)) & 1 ? +1 : -1;
    }
    return Walk(std::move(steps));
}

/// Uniform bridge: a shuffle of n/2 up-steps and n/2 down-steps.
inline Walk random_bridge(std::mt19937_64& rng, int n) {
    if (n % 2 != 0) throw DomainError("bridges have even length");
    std::vector<int> steps(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) steps[j] = j < n / 2 ? +1 : -1;
    for (int j = n - 1; j > 0; --j)
        std::swap(steps[j], steps[uniform_below(rng, static_cast<std::uint64_t>(j) + 1)]);
    return Walk(std::move(steps));
}

/// Gaussian increments via Box-Muller on the raw engine output.
inline RealWalk random_real_walk(std::mt19937_64& rng, int n) {
    std::vector<double> steps(static_cast<std::size_t>(n));
    for (int j = 0; j < n; j += 2) {
        double u1 = uniform_unit(rng);
        while (u1 == 0.0) u1 = uniform_unit(rng);
        const double u2 = uniform_unit(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        steps[j] = r * std::cos(2.0 * M_PI * u2);
        if (j + 1 < n) steps[j + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    return RealWalk(std::move(steps));
}

}  // namespace qtw
