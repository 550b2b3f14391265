#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace remnet {

// SplitMix64 finalizer (Steele, Lea, Flood). Used both as a hash and as the
// stream-derivation mixer so every random draw in the toolkit traces back to
// one master seed.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent substream seed from a master seed and up to three
// stream coordinates (stream id, run index, entry index, ...).
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::uint64_t a,
                                    std::uint64_t b = 0,
                                    std::uint64_t c = 0) noexcept {
    std::uint64_t h = mix64(base ^ 0x243f6a8885a308d3ULL);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

// Standard normal deviate computed from a single 64-bit hash value via
// Box-Muller. Deterministic: the same hash always yields the same deviate,
// which is what freezes the shadowing field in place.
inline double gaussian_from_hash(std::uint64_t h) noexcept {
    const double u1 = static_cast<double>((h >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(mix64(h) >> 11) * 0x1.0p-53; // [0, 1)
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

} // namespace remnet
