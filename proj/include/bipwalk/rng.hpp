#pragma once

#include <cstdint>
#include <random>

namespace bipwalk {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// Seed of the independent stream for (seed, index); used for per-trial and
// per-instance determinism that does not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
}

inline Rng derive_rng(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

// Unbiased uniform draw from [0, n). n must be positive.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t bound = (0xFFFFFFFFFFFFFFFFull / n) * n;
    std::uint64_t x = rng();
    while (x >= bound) x = rng();
    return x % n;
}

inline std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace bipwalk
