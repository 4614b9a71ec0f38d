#pragma once

#include <cstdint>
#include <random>

namespace udc {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); distinct streams give
/// statistically independent sequences for parallel workers.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x75646373u};
    return Rng(seq);
}

/// Uniform on [0,1) with 53 random bits; identical on every platform.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on the open interval (0,1).
inline double uniform_open01(Rng& rng) {
    return (static_cast<double>(rng() >> 12) + 0.5) * 0x1.0p-52;
}

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace udc
