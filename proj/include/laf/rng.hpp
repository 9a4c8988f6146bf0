#ifndef LAF_RNG_HPP
#define LAF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

// Deterministic, platform-independent random streams.
//
// Every random draw in this project comes from the counter-based generator
// below, so that a run is reproducible bit-for-bit from a single 64-bit seed
// and can be re-derived in any language. The contract, normative:
//
//   GAMMA = 0x9E3779B97F4A7C15
//   mix64(x):  x ^= x >> 30;  x *= 0xBF58476D1CE4E5B9;
//              x ^= x >> 27;  x *= 0x94D049BB133111EB;
//              x ^= x >> 31;  return x            (all mod 2^64)
//   next_u64(): state += GAMMA; return mix64(state)
//   uniform():  ((next_u64() >> 11) + 1) * 2^-53      -- open-closed (0, 1]
//   normal():   sqrt(-2 ln u1) * cos(2 pi u2)
//               consumes exactly two raw u64 draws, no caching of the
//               second Box-Muller variate
//   chain_seed(master, k) = mix64(master XOR (GAMMA * (k + 1) mod 2^64))
//
// Stream layout for a sampling chain k (seeded with chain_seed(master, k)):
//   1. d normals for the synthetic input vector, coordinate order
//      (skipped entirely when an explicit input is supplied), then
//   2. d normals for the noising step that produces the start latent.
// The denoising loop itself draws nothing.

namespace laf {

inline constexpr std::uint64_t kRngGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer; also used on its own to derive per-chain seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// Seed for the k-th independent chain of a run.
constexpr std::uint64_t chain_seed(std::uint64_t master_seed, std::uint64_t k) {
    return mix64(master_seed ^ (kRngGamma * (k + 1)));
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next_u64() {
        state_ += kRngGamma;
        return mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0, so log(u) is always finite.
    double uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
    }

    // Standard normal via Box-Muller (cosine branch only). Always consumes
    // exactly two raw draws so streams stay alignment-stable.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    void fill_normal(std::span<double> out) {
        for (double& v : out) v = normal();
    }

private:
    std::uint64_t state_;
};

} // namespace laf

#endif
