#pragma once

#include <cstdint>
#include <random>

namespace cyclenet {

// All seeded operations in this library draw from std::mt19937_64 and derive
// per-task seeds with splitmix64, so results are reproducible bit-for-bit
// across platforms for a fixed generator version.
inline constexpr const char* kRngVersion = "mt19937_64/splitmix64 v1";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Derives an independent stream seed from a master seed and up to two task
// indices (e.g. source node and run number).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t state = master;
    std::uint64_t s = detail::splitmix64(state);
    state = s ^ (a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    s = detail::splitmix64(state);
    state = s ^ (b * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL);
    return detail::splitmix64(state);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace cyclenet
