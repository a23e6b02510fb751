#pragma once

#include <cstdint>
#include <random>

namespace paes25 {

/// Every run owns one of these; identical seed and call sequence replay identically.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for replicate `replicate` at problem size `n`: splitmix64(splitmix64(splitmix64(base) ^ n) ^ replicate).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t replicate) noexcept {
    return splitmix64(splitmix64(splitmix64(base) ^ n) ^ replicate);
}

inline std::size_t uniform_index(Rng& rng, std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace paes25
