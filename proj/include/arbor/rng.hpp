#ifndef ARBOR_RNG_HPP
#define ARBOR_RNG_HPP

#include <cstdint>

namespace arbor {

// SplitMix64. Self-contained so identical seeds give identical streams on
// every platform (std distributions are implementation-defined).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }
};

}  // namespace arbor

#endif
