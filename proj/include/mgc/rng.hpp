#pragma once

#include <cstdint>
#include <limits>

namespace mgc {

// Counter-based pseudo-random generator (splitmix64 finalizer over an
// incrementing state). Substreams derived from (seed, index) are stable
// across platforms and runs, which keeps experiment records replayable.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(mix(seed + kGolden * (index + 1)) ^ mix(~index));
        g.next();
        return g;
    }

    std::uint64_t next() {
        state_ += kGolden;
        return mix(state_);
    }

    std::uint64_t operator()() { return next(); }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

    // Uniform in [0,1), 53-bit mantissa. Deterministic everywhere, unlike
    // std::uniform_real_distribution.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace mgc
