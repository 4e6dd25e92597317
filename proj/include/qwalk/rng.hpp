#pragma once

#include <cstdint>
#include <string_view>

namespace qwalk {

// Identifiers recorded in run manifests so a run can be reproduced bit for bit.
inline constexpr std::string_view kRngAlgorithm = "xoshiro256starstar";
inline constexpr std::string_view kRngVersion = "1.0";
inline constexpr std::string_view kSeedDerivation = "splitmix64(master) ^ 0xD1B54A32D192ED03*(index+1), splitmix64 again";

/// One splitmix64 step: advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Per-realization seed from (master seed, realization index).
/// Independent of evaluation order, so ensembles can be farmed out to workers.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ (0xD1B54A32D192ED03ull * (index + 1));
    return splitmix64(s);
}

/// xoshiro256** seeded through splitmix64. Fixed algorithm, no library
/// dependence, so streams are identical across platforms and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

} // namespace qwalk
