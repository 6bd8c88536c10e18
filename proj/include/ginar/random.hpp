#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace ginar {

/// SplitMix64 finalizer. Used to derive well-separated seeds for substreams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Combines a parent seed with a substream index into a child seed.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(parent) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Deterministic random stream: a 64-bit Mersenne Twister (std::mt19937_64,
/// whose output sequence is fixed by the C++ standard) seeded through
/// SplitMix64. Substreams are addressed by index, so the k-th replication of
/// an experiment draws the same numbers regardless of scheduling.
///
/// Satisfies UniformRandomBitGenerator so it can feed <random> distributions.
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe to pass to log().
    double uniform_positive() { return 1.0 - uniform(); }

    /// Independent child stream; depends only on this stream's seed and index.
    RandomStream substream(std::uint64_t index) const { return RandomStream(derive_seed(seed_, index)); }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace ginar
