#pragma once

#include <cstdint>

namespace leaguesim::rng {

// Counter-based stream built on the SplitMix64 finalizer. The draw for
// stream g at counter t is a pure function of (seed, g, t), so results do
// not depend on how iterations are sharded across workers. For a fixed
// (seed, g) the outputs are exactly the SplitMix64 sequence started at a
// per-stream state derived from the seed.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t stream_state = mix64(seed + kGolden * (stream + 1));
    return mix64(stream_state + kGolden * counter);
}

/// Uniform draw strictly inside (0,1), 53 usable bits. Never returns an
/// endpoint, so inverse-CDF transforms stay finite.
constexpr double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t bits = word(seed, stream, counter) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace leaguesim::rng
