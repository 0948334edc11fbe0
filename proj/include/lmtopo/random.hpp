#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace lmtopo {

/// Engine used everywhere randomness is needed. Only the raw 64-bit output
/// is consumed (distributions below are fixed), so streams are identical
/// across standard library implementations.
using Rng = std::mt19937_64;

/// SplitMix64 finaliser; derives independent child seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the index-th child stream of master.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform integer in [0, n) by rejection sampling; n > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n)
{
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n + 1) % n;
    while (true) {
        std::uint64_t x = rng();
        if (x <= limit) return x % n;
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace lmtopo
