#pragma once

#include <cstdint>

namespace clln {

// Counter-based generator: word k of a stream is a pure function of
// (seed, stream, k), so any draw can be recomputed without replaying the
// sequence and results are identical across platforms. The construction is
// the splitmix64 finalizer applied to a Weyl sequence, used here in random
// access ("counter") mode. Reports name it so replications can pin it.
inline constexpr const char* kGeneratorName = "splitmix64-counter";

inline constexpr std::uint64_t kWeylIncrement = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_word(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter) {
    std::uint64_t key = splitmix64_finalize(seed + kWeylIncrement * (stream + 1));
    return splitmix64_finalize(key + kWeylIncrement * (counter + 1));
}

/// Uniform double in [0, 1) from the top 53 bits of counter_word.
constexpr double counter_uniform01(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t counter) {
    return static_cast<double>(counter_word(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Stream assignments used by the simulation layer.
inline constexpr std::uint64_t kStreamValues = 0;
inline constexpr std::uint64_t kStreamPolicy = 1;

} // namespace clln
