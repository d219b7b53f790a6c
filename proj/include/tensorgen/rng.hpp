#pragma once

#include <cmath>
#include <cstdint>

namespace tensorgen {

// All randomness in the library flows through SplitMix64. The standard
// library's distributions are implementation-defined, so sampling here uses
// raw 64-bit draws only; outputs are bit-identical across platforms.

/// Finalizer of the SplitMix64 sequence; also used to derive substreams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Fixed-point multiply, no rejection;
    /// bias is < 2^-64 per draw and identical everywhere.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Standard normal via Box-Muller (one value per call, pair discarded).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::uint64_t state_;
};

/// Substream rule: stream i of a master seed is SplitMix64 seeded with
/// mix64(seed ^ mix64(i + 1)). Used for one-substream-per-row sampling,
/// per-tree forest streams and per-restart power-method starts, so serial
/// and parallel execution agree bit for bit.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index + 1)));
}

}  // namespace tensorgen
