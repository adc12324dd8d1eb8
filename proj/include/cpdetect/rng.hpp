#pragma once

#include <cstdint>

// Deterministic, platform-independent random number generation.
//
// splitmix64 (Steele et al., "Fast splittable pseudorandom number
// generators") is used for seed expansion and stream derivation;
// xoshiro256** (Blackman & Vigna) is the workhorse generator.
// Standard-library distributions are avoided on purpose: their output
// is implementation-defined, and every result in this project must be
// reproducible from a seed alone.

namespace cpdetect {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from (base, stream). Used to give
// each restart / replicate / grid point its own reproducible stream.
inline std::uint64_t seed_mix(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base;
    std::uint64_t a = splitmix64_next(s);
    s = a ^ (stream + 0x9E3779B97F4A7C15ULL);
    return splitmix64_next(s);
}

inline std::uint64_t seed_mix(std::uint64_t base, std::uint64_t s1, std::uint64_t s2) {
    return seed_mix(seed_mix(base, s1), s2);
}

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        // Canonical seeding: fill state with successive splitmix64 outputs.
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64_next(s);
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

    // Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling, no
    // modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t min = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= min) return x % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// In-place Fisher-Yates shuffle driven by the given stream.
template <typename T>
void fisher_yates(T* data, std::size_t n, Xoshiro256ss& rng) {
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        T tmp = data[i - 1];
        data[i - 1] = data[j];
        data[j] = tmp;
    }
}

} // namespace cpdetect
