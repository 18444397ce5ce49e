#pragma once

// SplitMix64: the fixed PRNG behind every seeded generator in this project.
// Chosen because its output stream is fully specified by the algorithm (no
// library-dependent distributions), so identical seeds give identical
// instances on every platform and in every implementation of this tool.

#include <cstdint>

namespace mtp {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Fair coin from the top bit.
    bool coin() { return (next() >> 63) != 0; }

    // Uniform value in [0, bound) by rejection, so there is no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x = next();
        while (x > limit) x = next();
        return x % bound;
    }

    // Uniform int in [lo, hi] inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace mtp
